use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graded::{koszul_sign, Description, OrientationElement, OrientationKind, Params, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    Internal,
    /// A hair end of the given zero-based color.
    External(usize),
}

/// A hairy graph with directed edges. Tadpoles are edges `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HairyGraph {
    pub vertices: Vec<VertexKind>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gradings {
    pub hairs: Vec<usize>,
    pub genus: i64,
    pub complexity: i64,
}

impl HairyGraph {
    pub fn new(vertices: Vec<VertexKind>, edges: Vec<(usize, usize)>) -> Self {
        HairyGraph { vertices, edges }
    }

    /// Two hairs of the given colors joined by a single edge.
    pub fn line(c1: usize, c2: usize) -> Self {
        HairyGraph::new(vec![VertexKind::External(c1), VertexKind::External(c2)], vec![(0, 1)])
    }

    /// One internal vertex with a tadpole and a single hair.
    pub fn circle_with_hair(c: usize) -> Self {
        HairyGraph::new(vec![VertexKind::Internal, VertexKind::External(c)], vec![(0, 0), (1, 0)])
    }

    /// One trivalent internal vertex with three hairs.
    pub fn tripod(c1: usize, c2: usize, c3: usize) -> Self {
        HairyGraph::new(
            vec![
                VertexKind::Internal,
                VertexKind::External(c1),
                VertexKind::External(c2),
                VertexKind::External(c3),
            ],
            vec![(1, 0), (2, 0), (3, 0)],
        )
    }

    pub fn n_internal(&self) -> usize {
        self.vertices.iter().filter(|k| **k == VertexKind::Internal).count()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn tadpoles_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }

    /// Checks the structural invariants of a generator.
    pub fn validate(&self, params: &Params) -> Result<()> {
        let n = self.vertices.len();
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return invalid(format!("edge ({a},{b}) refers to a missing vertex"));
            }
        }
        let mut has_external = false;
        for (v, kind) in self.vertices.iter().enumerate() {
            match kind {
                VertexKind::External(c) => {
                    params.color(*c)?;
                    has_external = true;
                    if self.valence(v) != 1 || self.tadpoles_at(v) != 0 {
                        return invalid(format!("external vertex {v} must have valence 1"));
                    }
                }
                VertexKind::Internal => {
                    if self.valence(v) < 3 {
                        return invalid(format!("internal vertex {v} has valence below 3"));
                    }
                }
            }
        }
        if !has_external {
            return invalid("a hairy graph needs at least one external vertex");
        }
        if !self.is_connected() {
            return invalid("hairy graph is not connected");
        }
        Ok(())
    }

    /// `(d-1)|E| - d|V_I| - sum_i m_i s_i`.
    pub fn degree(&self, params: &Params) -> Result<i64> {
        let mut deg = (params.d - 1) * self.edges.len() as i64;
        for kind in &self.vertices {
            deg -= match kind {
                VertexKind::Internal => params.d,
                VertexKind::External(c) => params.color(*c)?,
            };
        }
        Ok(deg)
    }

    pub fn hair_counts(&self, r: usize) -> Vec<usize> {
        let mut s = vec![0; r];
        for kind in &self.vertices {
            if let VertexKind::External(c) = kind {
                if *c < r {
                    s[*c] += 1;
                }
            }
        }
        s
    }

    pub fn gradings(&self, r: usize) -> Gradings {
        let hairs = self.hair_counts(r);
        let genus = self.edges.len() as i64 - self.vertices.len() as i64 + 1;
        let total: usize = hairs.iter().sum();
        Gradings { complexity: genus + total as i64 - 1, hairs, genus }
    }

    pub fn vertex_kind(&self, v: usize) -> OrientationKind {
        match self.vertices[v] {
            VertexKind::Internal => OrientationKind::InternalVertex,
            VertexKind::External(c) => OrientationKind::ExternalVertex(c),
        }
    }

    /// Vertices in index order followed by edges in index order.
    pub fn standard_order(&self) -> Vec<OrientationElement> {
        let mut order: Vec<OrientationElement> = (0..self.vertices.len())
            .map(|v| OrientationElement { kind: self.vertex_kind(v), id: v })
            .collect();
        order.extend(
            (0..self.edges.len())
                .map(|e| OrientationElement { kind: OrientationKind::NonColoredEdge, id: e }),
        );
        order
    }

    /// The sign `s` with `(G, order) = s * (G, standard order)`.
    pub fn orientation_sign(&self, order: &[OrientationElement], params: &Params) -> Result<Sign> {
        let std = self.standard_order();
        if order.len() != std.len() {
            return invalid("orientation must list every vertex and edge exactly once");
        }
        let mut perm = Vec::with_capacity(std.len());
        for el in &std {
            match order.iter().position(|o| o == el) {
                Some(p) => perm.push(p),
                None => return invalid(format!("orientation is missing {el:?}")),
            }
        }
        let degrees = order
            .iter()
            .map(|el| params.degree_of(el.kind, Description::First))
            .collect::<Result<Vec<_>>>()?;
        koszul_sign(&perm, &degrees)
    }
}
