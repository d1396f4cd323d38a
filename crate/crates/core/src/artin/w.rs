//! The graph W(n) and the named graphs built from it.

use crate::artin::{ArtinError, DEFAULT_COSET_LIMIT};
use crate::canon::canonical_form;
use crate::embed::embeds_into;
use crate::fold::fold;
use crate::graph::{connected_components, ColoredGraph, Edge, EdgeColor, WTag, Word};
use crate::product::{fiber_product, project_second};

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|w| Word::parse(w).expect("static word")).collect()
}

fn check_n(n: u32) -> Result<(), ArtinError> {
    if n < 4 {
        return Err(ArtinError::BadParameter(format!("n must be at least 4, got {n}")));
    }
    Ok(())
}

/// Free basis of π₁(W): x^n, y³, yδ⁻¹, y²δ⁻¹y⁻¹, δ⁻¹y, yx, y²xy⁻¹.
pub fn pi1_generators(n: u32) -> Result<Vec<Word>, ArtinError> {
    check_n(n)?;
    let mut out = vec![Word::power(EdgeColor::X, n as usize)];
    out.extend(words(&["yyy", "yD", "yyDY", "Dy", "yx", "yyxY"]));
    Ok(out)
}

/// Generators of the filling subgroup N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NWords {
    pub n: u32,
    pub generators: Vec<Word>,
}

impl NWords {
    pub fn new(n: u32) -> Result<Self, ArtinError> {
        check_n(n)?;
        let mut generators = vec![Word::power(EdgeColor::X, n as usize)];
        generators.extend(words(&["yyy", "yD", "yyDY", "Dy"]));
        Ok(NWords { n, generators })
    }

    /// Cyclically reduced forms, without repeats.
    pub fn traced_words(&self) -> Vec<Word> {
        let mut out: Vec<Word> = Vec::new();
        for w in &self.generators {
            let core = w.cyclic_core().1;
            if !out.contains(&core) {
                out.push(core);
            }
        }
        out
    }
}

/// Successor of vertex `base` of W(n) along a `color` edge.
///
/// Red edges form the cycle 1 → 2 → … → n → 1; green and yellow edges both
/// form the triangle 1 → n → n−1 → 1.
pub fn w_succ(n: u32, base: u32, color: EdgeColor) -> Option<u32> {
    if base == 0 || base > n {
        return None;
    }
    match color {
        EdgeColor::X => Some(if base == n { 1 } else { base + 1 }),
        EdgeColor::Y | EdgeColor::D => match base {
            1 => Some(n),
            b if b == n => Some(n - 1),
            b if b == n - 1 => Some(1),
            _ => None,
        },
    }
}

pub fn w_pred(n: u32, base: u32, color: EdgeColor) -> Option<u32> {
    (1..=n).find(|&b| w_succ(n, b, color) == Some(base))
}

/// W(n) as the folded core of [`pi1_generators`], relabeled so that vertex
/// `k` (index `k − 1`, id `k`, W-label `k`) is reached from the basepoint by
/// `x^(k−1)`. The basepoint is vertex 1.
pub fn build_w(n: u32) -> Result<ColoredGraph, ArtinError> {
    let folded = fold(&pi1_generators(n)?);
    let tables = folded.tables()?;
    let start = folded.basepoint().expect("fold keeps the basepoint");
    let mut perm = vec![usize::MAX; folded.vertex_count()];
    let mut v = start;
    for k in 0..folded.vertex_count() {
        perm[v] = k;
        v = tables.succ(v, EdgeColor::X).expect("W has a Hamiltonian red cycle");
    }
    let w = folded.permuted(&perm);
    let ids = (1..=n as u64).collect();
    let w = ColoredGraph::from_parts(ids, w.edges().to_vec(), Some(0), Some((1..=n).map(WTag::new).collect()))?;
    check_w_labels(&w, n)?;
    debug_assert_eq!(w.edge_count(), n as usize + 6);
    Ok(w)
}

/// The red n-cycle, labeled as the red cycle of W(n).
pub fn build_red_ngon(n: u32) -> Result<ColoredGraph, ArtinError> {
    check_n(n)?;
    let k = n as usize;
    let g = ColoredGraph::from_parts(
        (1..=n as u64).collect(),
        (0..k).map(|i| Edge::new(i, (i + 1) % k, EdgeColor::X)).collect(),
        None,
        Some((1..=n).map(WTag::new).collect()),
    )?;
    Ok(g)
}

/// The component of `W ⊗ W` containing the pair `(1, n − 1)`, projected to
/// the second factor.
pub fn build_x1(n: u32) -> Result<ColoredGraph, ArtinError> {
    square_component(n, n as u64 - 1)
}

/// The component of `W ⊗ W` containing the pair `(1, n)`, projected to the
/// second factor.
pub fn build_x2(n: u32) -> Result<ColoredGraph, ArtinError> {
    square_component(n, n as u64)
}

fn square_component(n: u32, right: u64) -> Result<ColoredGraph, ArtinError> {
    if n < 5 {
        return Err(ArtinError::BadParameter(format!("X1 and X2 need n at least 5, got {n}")));
    }
    let w = build_w(n)?;
    let product = fiber_product(&w, &w)?;
    let part = connected_components(&product)
        .into_iter()
        .find(|c| c.pairs().is_some_and(|p| p.iter().any(|o| o.left == 1 && o.right == right)))
        .expect("every pair lies in some component");
    Ok(project_second(&part)?)
}

fn check_four(n: u32, name: &str) -> Result<(), ArtinError> {
    if n != 4 {
        return Err(ArtinError::BadParameter(format!("{name} is only defined for n = 4, got {n}")));
    }
    Ok(())
}

/// The 12-vertex component of `W(4) ⊗ W(4)`, projected to the second factor.
pub fn build_y1(n: u32) -> Result<ColoredGraph, ArtinError> {
    check_four(n, "Y1")?;
    let w = build_w(n)?;
    let product = fiber_product(&w, &w)?;
    let part = connected_components(&product)
        .into_iter()
        .find(|c| c.vertex_count() == 12)
        .expect("W(4) ⊗ W(4) has a 12-vertex component");
    Ok(project_second(&part)?)
}

/// The new component of `W ⊗ β(Y1)`.
pub fn build_y2(n: u32) -> Result<ColoredGraph, ArtinError> {
    check_four(n, "Y2")?;
    let (w, y1, by1) = y_basis(n)?;
    new_component(&w, &by1, &[&w, &y1, &by1], n)
}

/// The new component of `β(Y1) ⊗ W`.
pub fn build_y3(n: u32) -> Result<ColoredGraph, ArtinError> {
    check_four(n, "Y3")?;
    let (w, y1, by1) = y_basis(n)?;
    new_component(&by1, &w, &[&w, &y1, &by1], n)
}

fn y_basis(n: u32) -> Result<(ColoredGraph, ColoredGraph, ColoredGraph), ArtinError> {
    let w = build_w(n)?;
    let y1 = build_y1(n)?;
    let by1 = crate::artin::beta(&y1, n)?;
    Ok((w, y1, by1))
}

/// Largest component of `g ⊗ h` that neither embeds (with labels) into one
/// of `known` nor is q-contractible.
fn new_component(g: &ColoredGraph, h: &ColoredGraph, known: &[&ColoredGraph], n: u32) -> Result<ColoredGraph, ArtinError> {
    let product = fiber_product(g, h)?;
    let mut found = Vec::new();
    for part in connected_components(&product) {
        if part.edge_count() == 0 {
            continue;
        }
        let c = project_second(&part)?;
        if known.iter().any(|k| embeds_into(&c, k, true).is_some()) {
            continue;
        }
        if crate::artin::q_contractible(&c, n, DEFAULT_COSET_LIMIT)?.is_contractible() {
            continue;
        }
        found.push(c);
    }
    found
        .into_iter()
        .map(|c| {
            let key = canonical_form(&c, true).expect("components are connected and immersed");
            ((c.vertex_count(), c.edge_count()), std::cmp::Reverse(key), c)
        })
        .max_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)))
        .map(|t| t.2)
        .ok_or_else(|| ArtinError::BadParameter("no new component found".into()))
}

/// Check that `g` is W-labeled and every edge lies over an edge of W(n).
/// Barred tags count as their base.
pub fn check_w_labels(g: &ColoredGraph, n: u32) -> Result<(), ArtinError> {
    let Some(labels) = g.wlabels() else {
        return Err(ArtinError::NotWLabeled);
    };
    for (v, tag) in labels.iter().enumerate() {
        if tag.base == 0 || tag.base > n {
            return Err(ArtinError::NotCoverCore(format!("vertex {} has label {tag}, outside 1..{n}", g.id(v))));
        }
    }
    for e in g.edges() {
        let (s, d) = (labels[e.src].base, labels[e.dst].base);
        if w_succ(n, s, e.color) != Some(d) {
            return Err(ArtinError::NotCoverCore(format!(
                "{}-edge {} -> {} lies over {s} -> {d}, which is not an edge of W({n})",
                e.color,
                g.id(e.src),
                g.id(e.dst)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_lists() {
        for n in [4, 8] {
            let ws = pi1_generators(n).unwrap();
            assert_eq!(ws.len(), 7);
            assert_eq!(ws[0].len(), n as usize);
        }
        assert!(matches!(pi1_generators(3), Err(ArtinError::BadParameter(_))));
        let nw = NWords::new(5).unwrap();
        assert_eq!(nw.generators.len(), 5);
        assert_eq!(nw.traced_words().len(), 4);
    }

    #[test]
    fn w_adjacency() {
        assert_eq!(w_succ(6, 6, EdgeColor::X), Some(1));
        assert_eq!(w_succ(6, 1, EdgeColor::Y), Some(6));
        assert_eq!(w_succ(6, 6, EdgeColor::D), Some(5));
        assert_eq!(w_succ(6, 5, EdgeColor::D), Some(1));
        assert_eq!(w_succ(6, 3, EdgeColor::Y), None);
        assert_eq!(w_pred(6, 1, EdgeColor::X), Some(6));
        assert_eq!(w_pred(6, 1, EdgeColor::Y), Some(5));
    }

    #[test]
    fn w_shape() {
        for n in 4..=9 {
            let w = build_w(n).unwrap();
            assert_eq!(w.vertex_count(), n as usize);
            assert_eq!(w.edge_count(), n as usize + 6);
            assert_eq!(w.basepoint(), Some(0));
            for e in w.edges() {
                let (s, d) = (e.src as u32 + 1, e.dst as u32 + 1);
                assert_eq!(w_succ(n, s, e.color), Some(d));
            }
        }
    }

    #[test]
    fn label_checks() {
        let w = build_w(4).unwrap();
        assert!(check_w_labels(&w, 4).is_ok());
        assert_eq!(check_w_labels(&w.clone().without_wlabels(), 4), Err(ArtinError::NotWLabeled));
        let shifted = w.with_wlabels((2..=5).map(WTag::new).collect()).unwrap();
        assert!(matches!(check_w_labels(&shifted, 4), Err(ArtinError::NotCoverCore(_))));
    }

    #[test]
    fn named_graph_sizes() {
        let x1 = build_x1(8).unwrap();
        assert_eq!(x1.vertex_count(), 16);
        assert_eq!(x1.color_count(EdgeColor::X), 16);
        assert_eq!(x1.color_count(EdgeColor::Y), 3);
        assert_eq!(x1.color_count(EdgeColor::D), 3);
        assert!(matches!(build_x1(4), Err(ArtinError::BadParameter(_))));
        let y1 = build_y1(4).unwrap();
        assert_eq!((y1.vertex_count(), y1.edge_count()), (12, 24));
        assert!(matches!(build_y1(5), Err(ArtinError::BadParameter(_))));
    }
}
