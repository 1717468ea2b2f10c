use num_traits::One;

use super::canon::{canonicalize, CanonicalGenerator};
use super::graph::{HairyGraph, VertexKind};
use crate::error::{inconsistent, Result};
use crate::graded::{koszul_sign, Params, Sign};
use crate::{QCombination, Rational};

/// All expansion terms of `g`, before canonicalization or collection.
///
/// For an internal vertex `x` the first incident half-edge stays at `x` and
/// every subset `B` of the remaining half-edges with `|B| >= 2` and at least
/// two half-edges left behind moves to a new vertex `v`, joined by a new edge
/// `x -> v`. The orientation `[v, e, old...]` is rewritten to the standard one.
pub fn expansion_terms(g: &HairyGraph, params: &Params) -> Result<Vec<(HairyGraph, Sign)>> {
    let n = g.vertices.len();
    let ne = g.edges.len();
    // degrees in the order [v, e, vertices..., edges...]
    let mut degrees = vec![-params.d, params.d - 1];
    for kind in &g.vertices {
        degrees.push(match kind {
            VertexKind::Internal => -params.d,
            VertexKind::External(c) => -params.color(*c)?,
        });
    }
    degrees.extend(std::iter::repeat_n(params.d - 1, ne));
    let mut perm: Vec<usize> = (2..2 + n).collect();
    perm.push(0);
    perm.extend(2 + n..2 + n + ne);
    perm.push(1);
    let reorder = koszul_sign(&perm, &degrees)?;

    let mut out = Vec::new();
    for x in 0..n {
        if g.vertices[x] != VertexKind::Internal {
            continue;
        }
        let half: Vec<(usize, usize)> = g
            .edges
            .iter()
            .enumerate()
            .flat_map(|(i, &(a, b))| {
                let mut h = Vec::new();
                if a == x {
                    h.push((i, 0));
                }
                if b == x {
                    h.push((i, 1));
                }
                h
            })
            .collect();
        let l = half.len();
        if l < 4 {
            continue;
        }
        let rest = l - 1;
        for mask in 0u64..(1u64 << rest) {
            let size = mask.count_ones() as usize;
            if size < 2 || l - size < 2 {
                continue;
            }
            let mut edges = g.edges.clone();
            for (bit, &(ei, end)) in half[1..].iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    if end == 0 {
                        edges[ei].0 = n;
                    } else {
                        edges[ei].1 = n;
                    }
                }
            }
            edges.push((x, n));
            let mut vertices = g.vertices.clone();
            vertices.push(VertexKind::Internal);
            out.push((HairyGraph { vertices, edges }, reorder));
        }
    }
    Ok(out)
}

/// Vertex-expansion differential of a nonzero canonical generator.
pub fn expansion_differential(
    gen: &CanonicalGenerator,
    params: &Params,
) -> Result<QCombination<HairyGraph>> {
    let mut lc = QCombination::new();
    if gen.zero {
        return Ok(lc);
    }
    let r = params.r();
    let deg = gen.graph.degree(params)?;
    let gr = gen.graph.gradings(r);
    for (term, sign) in expansion_terms(&gen.graph, params)? {
        let tg = term.gradings(r);
        if term.degree(params)? != deg - 1 || tg != gr {
            return inconsistent("expansion changed the gradings of a hairy graph");
        }
        let (canon, s2) = canonicalize(&term, params);
        if canon.zero {
            continue;
        }
        lc.add_term(canon.graph, (sign * s2).to_scalar::<Rational>() * Rational::one());
    }
    Ok(lc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(l: usize, colors: &[usize]) -> HairyGraph {
        let mut vertices = vec![VertexKind::Internal];
        let mut edges = Vec::new();
        for i in 0..l {
            vertices.push(VertexKind::External(colors[i % colors.len()]));
            edges.push((i + 1, 0));
        }
        HairyGraph::new(vertices, edges)
    }

    #[test]
    fn term_counts() {
        let params = Params::new(vec![2, 3], 9).unwrap();
        assert_eq!(expansion_terms(&star(3, &[0]), &params).unwrap().len(), 0);
        assert_eq!(expansion_terms(&star(4, &[0, 1]), &params).unwrap().len(), 3);
        assert_eq!(expansion_terms(&star(5, &[0]), &params).unwrap().len(), 10);
        assert_eq!(expansion_terms(&star(6, &[0]), &params).unwrap().len(), 25);
    }

    #[test]
    fn trivalent_graphs_are_closed() {
        let params = Params::new(vec![2], 6).unwrap();
        let (c, _) = canonicalize(&HairyGraph::tripod(0, 0, 0), &params);
        assert!(expansion_differential(&c, &params).unwrap().is_empty());
    }

    #[test]
    fn four_star_two_colors() {
        let params = Params::new(vec![2, 4], 7).unwrap();
        let (c, _) = canonicalize(&star(4, &[0, 0, 1, 1]), &params);
        assert!(!c.zero);
        let dx = expansion_differential(&c, &params).unwrap();
        // three splittings, two of them isomorphic (each pair of like colors together)
        assert!(dx.len() <= 3);
        for (g, _) in dx.iter() {
            assert_eq!(g.n_internal(), 2);
        }
    }
}
