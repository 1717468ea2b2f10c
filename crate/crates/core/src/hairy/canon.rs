//! Canonical labeling by individualization and refinement.
//!
//! The search tree is explored in full, so the leaves that reach the minimal
//! encoding form a coset of the vertex automorphism group. Comparing the
//! orientation signs of those leaves decides whether the generator vanishes.
//! Automorphisms fixing every vertex only permute parallel edges or flip
//! tadpoles; they are handled up front.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph::{HairyGraph, VertexKind};
use crate::graded::{Params, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalGenerator {
    pub graph: HairyGraph,
    pub zero: bool,
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    graph: &'a HairyGraph,
    params: &'a Params,
    adj: Vec<Vec<usize>>,
    best: Option<Vec<(usize, usize)>>,
    best_labeling: Vec<usize>,
    best_sign: Sign,
    conflict: bool,
}

impl<'a> Search<'a> {
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let mut changed = false;
            let mut out: Cells = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let sig: Vec<usize> = cells
                        .iter()
                        .map(|c| c.iter().map(|&w| self.adj[v][w]).sum())
                        .collect();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    changed = true;
                }
                out.extend(groups.into_values());
            }
            cells = out;
            if !changed {
                return cells;
            }
        }
    }

    fn labeling_sign(&self, lab: &[usize]) -> Sign {
        let g = self.graph;
        let n = g.vertices.len();
        let mut by_label = vec![0usize; n];
        for (v, &l) in lab.iter().enumerate() {
            by_label[l] = v;
        }
        let vdeg = |v: usize| match g.vertices[v] {
            VertexKind::Internal => -self.params.d,
            VertexKind::External(c) => -self.params.m[c],
        };
        let mut sign = Sign::Plus;
        // vertex reordering
        for a in 0..n {
            for b in a + 1..n {
                let (va, vb) = (by_label[a], by_label[b]);
                if va > vb && vdeg(va) % 2 != 0 && vdeg(vb) % 2 != 0 {
                    sign = -sign;
                }
            }
        }
        let keys: Vec<(usize, usize, usize)> = g
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let (x, y) = (lab[a], lab[b]);
                (x.min(y), x.max(y), i)
            })
            .collect();
        if (self.params.d - 1) % 2 != 0 {
            for i in 0..keys.len() {
                for j in i + 1..keys.len() {
                    if keys[i] > keys[j] {
                        sign = -sign;
                    }
                }
            }
        }
        if self.params.d % 2 != 0 {
            for &(a, b) in &g.edges {
                if lab[a] > lab[b] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.graph.vertices.len();
        let mut lab = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let mut enc: Vec<(usize, usize)> = self
            .graph
            .edges
            .iter()
            .map(|&(a, b)| (lab[a].min(lab[b]), lab[a].max(lab[b])))
            .collect();
        enc.sort_unstable();
        match &self.best {
            Some(b) if enc > *b => {}
            Some(b) if enc == *b => {
                if !self.conflict && self.labeling_sign(&lab) != self.best_sign {
                    self.conflict = true;
                }
            }
            _ => {
                self.best_sign = self.labeling_sign(&lab);
                self.best = Some(enc);
                self.best_labeling = lab;
                self.conflict = false;
            }
        }
    }

    fn search(&mut self, cells: Cells) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        for i in 0..cells[target].len() {
            let v = cells[target][i];
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(rest);
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }
}

/// True if some automorphism fixing all vertices acts by `-1`.
fn vertex_fixing_zero(g: &HairyGraph, params: &Params) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in &g.edges {
        if a == b && params.d % 2 != 0 {
            return true;
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) && params.d % 2 == 0 {
            return true;
        }
    }
    false
}

/// Canonical form of `g` and the sign `s` with `g = s * canonical`.
///
/// Vanishing generators are flagged and reported with sign `+1`.
pub fn canonicalize(g: &HairyGraph, params: &Params) -> (CanonicalGenerator, Sign) {
    let n = g.vertices.len();
    let mut adj = vec![vec![0usize; n]; n];
    for &(a, b) in &g.edges {
        if a != b {
            adj[a][b] += 1;
            adj[b][a] += 1;
        }
    }
    let mut initial: BTreeMap<(VertexKind, usize, usize), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        initial.entry((g.vertices[v], g.valence(v), g.tadpoles_at(v))).or_default().push(v);
    }
    let mut s = Search {
        graph: g,
        params,
        adj,
        best: None,
        best_labeling: Vec::new(),
        best_sign: Sign::Plus,
        conflict: false,
    };
    if n > 0 {
        s.search(initial.into_values().collect());
    }
    let lab = s.best_labeling;
    let mut vertices = vec![VertexKind::Internal; n];
    for v in 0..n {
        vertices[lab[v]] = g.vertices[v];
    }
    let graph = HairyGraph { vertices, edges: s.best.unwrap_or_default() };
    let zero = s.conflict || vertex_fixing_zero(g, params);
    let sign = if zero { Sign::Plus } else { s.best_sign };
    (CanonicalGenerator { graph, zero }, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: i64, d: i64) -> Params {
        Params::new(vec![m], d).unwrap()
    }

    #[test]
    fn line_graph_parity() {
        let (c, _) = canonicalize(&HairyGraph::line(0, 0), &p(2, 7));
        assert!(c.zero);
        let (c, s) = canonicalize(&HairyGraph::line(0, 0), &p(2, 6));
        assert!(!c.zero);
        assert_eq!(s, Sign::Plus);
        // two colors never cancel
        let params = Params::new(vec![2, 3], 9).unwrap();
        let (c, _) = canonicalize(&HairyGraph::line(1, 0), &params);
        assert!(!c.zero);
        assert_eq!(c.graph.vertices, vec![VertexKind::External(0), VertexKind::External(1)]);
    }

    #[test]
    fn double_edge_even_d() {
        // two internal vertices joined by a double edge, each carrying a hair
        let g = HairyGraph::new(
            vec![VertexKind::Internal, VertexKind::Internal, VertexKind::External(0), VertexKind::External(0)],
            vec![(0, 1), (0, 1), (2, 0), (3, 1)],
        );
        assert!(canonicalize(&g, &p(2, 6)).0.zero);
        assert!(!canonicalize(&g, &p(3, 7)).0.zero);
    }

    #[test]
    fn tadpole_odd_d() {
        let g = HairyGraph::circle_with_hair(0);
        assert!(canonicalize(&g, &p(2, 7)).0.zero);
        assert!(!canonicalize(&g, &p(2, 6)).0.zero);
    }

    #[test]
    fn relabeling_is_invisible() {
        let params = p(3, 8);
        let g = HairyGraph::new(
            vec![VertexKind::External(0), VertexKind::Internal, VertexKind::External(0), VertexKind::Internal, VertexKind::External(0), VertexKind::External(0)],
            vec![(0, 1), (1, 3), (2, 1), (3, 4), (5, 3)],
        );
        let h = HairyGraph::new(
            vec![VertexKind::Internal, VertexKind::External(0), VertexKind::External(0), VertexKind::Internal, VertexKind::External(0), VertexKind::External(0)],
            vec![(0, 3), (1, 0), (2, 0), (4, 3), (3, 5)],
        );
        let (cg, _) = canonicalize(&g, &params);
        let (ch, _) = canonicalize(&h, &params);
        assert_eq!(cg, ch);
    }
}
