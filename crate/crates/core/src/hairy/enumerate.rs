use std::collections::BTreeMap;

use super::canon::canonicalize;
use super::graph::{HairyGraph, VertexKind};
use crate::error::{invalid, Result};
use crate::graded::Params;

/// Nonzero canonical generators of one `(s, t)` block, grouped by degree and
/// sorted by canonical encoding within each degree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Enumeration {
    pub by_degree: BTreeMap<i64, Vec<HairyGraph>>,
    /// Isomorphism classes dropped because an automorphism reverses orientation.
    pub zero_discarded: BTreeMap<i64, usize>,
}

impl Enumeration {
    pub fn total(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }
}

/// Non-decreasing sequences of length `k` over `0..n`.
pub(crate) fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(n, k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    } else if n > 0 {
        go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn cartesian(parts: &[Vec<Vec<usize>>]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for choices in parts {
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for a in &acc {
            for c in choices {
                let mut v = a.clone();
                v.extend_from_slice(c);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// Enumerates one representative per isomorphism class of connected hairy
/// graphs with hair multidegree `s` and complexity `t`.
pub fn enumerate_generators(
    params: &Params,
    s: &[usize],
    t: usize,
    degree_range: Option<(i64, i64)>,
) -> Result<Enumeration> {
    if s.len() != params.r() {
        return invalid(format!("hair vector has {} entries for r = {}", s.len(), params.r()));
    }
    let total: usize = s.iter().sum();
    let mut out = Enumeration::default();
    if total == 0 || t + 1 < total {
        return Ok(out);
    }
    let genus = t + 1 - total;
    let max_internal = (2 * genus + total).saturating_sub(2);
    let in_range = |deg: i64| degree_range.is_none_or(|(lo, hi)| lo <= deg && deg <= hi);
    let hair_colors: Vec<usize> =
        s.iter().enumerate().flat_map(|(c, &k)| std::iter::repeat_n(c, k)).collect();

    let mut found: BTreeMap<HairyGraph, bool> = BTreeMap::new();
    for n_int in 0..=max_internal {
        let edges_total = n_int + total + genus - 1;
        let deg = (params.d - 1) * edges_total as i64
            - params.d * n_int as i64
            - s.iter().zip(&params.m).map(|(&k, &m)| k as i64 * m).sum::<i64>();
        if !in_range(deg) {
            continue;
        }
        if n_int == 0 {
            if total == 2 && genus == 0 {
                let g = HairyGraph::line(hair_colors[0], hair_colors[1]);
                let (c, _) = canonicalize(&g, params);
                found.insert(c.graph, c.zero);
            }
            continue;
        }
        let core = n_int + genus - 1;
        let pairs: Vec<(usize, usize)> =
            (0..n_int).flat_map(|i| (i..n_int).map(move |j| (i, j))).collect();
        let hair_choices: Vec<Vec<Vec<usize>>> = s.iter().map(|&k| multisets(n_int, k)).collect();
        let attachments = cartesian(&hair_choices);
        for core_edges in multisets(pairs.len(), core) {
            let mut valence = vec![0usize; n_int];
            for &p in &core_edges {
                valence[pairs[p].0] += 1;
                valence[pairs[p].1] += 1;
            }
            for attach in &attachments {
                let mut val = valence.clone();
                for &a in attach {
                    val[a] += 1;
                }
                if val.iter().any(|&v| v < 3) {
                    continue;
                }
                let mut vertices = vec![VertexKind::Internal; n_int];
                let mut edges: Vec<(usize, usize)> = core_edges.iter().map(|&p| pairs[p]).collect();
                for (h, &a) in attach.iter().enumerate() {
                    vertices.push(VertexKind::External(hair_colors[h]));
                    edges.push((n_int + h, a));
                }
                let g = HairyGraph { vertices, edges };
                if !g.is_connected() {
                    continue;
                }
                let (c, _) = canonicalize(&g, params);
                found.entry(c.graph).or_insert(c.zero);
            }
        }
    }
    for (g, zero) in found {
        let deg = g.degree(params)?;
        if zero {
            *out.zero_discarded.entry(deg).or_default() += 1;
        } else {
            out.by_degree.entry(deg).or_default().push(g);
        }
    }
    Ok(out)
}
