//! Simple graphs on up to 64 vertices, with the `X[s]` family: the complete
//! graph minus `s` cyclically adjacent edges.

use serde_json::Value;

use crate::error::Error;

pub const MAX_GRAPH_VERTICES: usize = 64;

/// A simple undirected graph; vertices are `0..m` internally. Adjacency is
/// kept as one bitmask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds from 0-based edges, rejecting loops and duplicates.
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if m < 1 || m > MAX_GRAPH_VERTICES {
            return Err(Error::VertexCount {
                m,
                max: MAX_GRAPH_VERTICES,
            });
        }
        let mut g = Graph { m, adj: vec![0; m] };
        for &(a, b) in edges {
            if a >= m || b >= m {
                return Err(Error::EdgeOutOfRange { a: a + 1, b: b + 1, m });
            }
            if a == b {
                return Err(Error::Loop { v: a + 1 });
            }
            if g.adj[a] >> b & 1 == 1 {
                return Err(Error::DuplicateEdge {
                    a: a.min(b) + 1,
                    b: a.max(b) + 1,
                });
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    pub fn complete(m: usize) -> Result<Self, Error> {
        if m < 1 || m > MAX_GRAPH_VERTICES {
            return Err(Error::VertexCount {
                m,
                max: MAX_GRAPH_VERTICES,
            });
        }
        let all = mask_all(m);
        let adj = (0..m).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph { m, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Sorted 0-based edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in (a + 1)..self.m {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = mask_all(self.m);
        let adj = (0..self.m)
            .map(|v| all & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { m: self.m, adj }
    }

    /// Subgraph induced on the given vertices, re-indexed in their order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut adj = vec![0u64; vertices.len()];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_edge(a, b) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph {
            m: vertices.len(),
            adj,
        }
    }

    /// Subgraph induced on a vertex bitmask, re-indexed by ascending vertex.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let vertices: Vec<usize> = (0..self.m).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced(&vertices)
    }

    /// Number of connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for v in 0..self.m {
            if seen >> v & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u64 << v;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u];
                }
                frontier = next & !seen;
            }
        }
        count
    }

    /// Parses the CLI graph format `{"m": int, "edges": [[a, b], ...]}` with
    /// 1-based vertices.
    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::BadGraphJson("expected an object".into()))?;
        let m = obj
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::BadGraphJson("missing integer field \"m\"".into()))?
            as usize;
        let edges_v = obj
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::BadGraphJson("missing array field \"edges\"".into()))?;
        let mut edges = Vec::with_capacity(edges_v.len());
        for e in edges_v {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::BadGraphJson("edges must be pairs".into()))?;
            let a = pair[0]
                .as_u64()
                .ok_or_else(|| Error::BadGraphJson("edge endpoints must be integers".into()))?;
            let b = pair[1]
                .as_u64()
                .ok_or_else(|| Error::BadGraphJson("edge endpoints must be integers".into()))?;
            if a == 0 || b == 0 {
                return Err(Error::BadGraphJson("vertices are 1-based".into()));
            }
            edges.push((a as usize - 1, b as usize - 1));
        }
        Graph::new(m, &edges)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "m": self.m,
            "edges": self
                .edges()
                .iter()
                .map(|&(a, b)| vec![a + 1, b + 1])
                .collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn mask_all(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// The complete graph on `m >= 3` vertices with the first `s` cyclically
/// adjacent edges `{k, k+1 mod m}` deleted (`s = m` deletes the whole cycle).
pub fn build_xs(m: usize, s: usize) -> Result<Graph, Error> {
    if m < 3 || m > MAX_GRAPH_VERTICES {
        return Err(Error::VertexCount {
            m,
            max: MAX_GRAPH_VERTICES,
        });
    }
    if s > m {
        return Err(Error::CycleDeletions { s, m });
    }
    let mut g = Graph::complete(m)?;
    for k in 0..s {
        let a = k;
        let b = (k + 1) % m;
        g.adj[a] &= !(1u64 << b);
        g.adj[b] &= !(1u64 << a);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xs_edge_counts() {
        assert_eq!(build_xs(6, 0).unwrap().edge_count(), 15);
        assert_eq!(build_xs(6, 5).unwrap().edge_count(), 10);
        assert_eq!(build_xs(6, 6).unwrap().edge_count(), 9);
        assert!(build_xs(6, 7).is_err());
        assert!(build_xs(2, 0).is_err());
    }

    #[test]
    fn full_deletion_complement_is_the_cycle() {
        let c = build_xs(6, 6).unwrap().complement();
        assert_eq!(c.edge_count(), 6);
        for v in 0..6 {
            assert!(c.has_edge(v, (v + 1) % 6));
        }
    }

    #[test]
    fn complement_is_an_involution() {
        let g = build_xs(7, 4).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_path_from_the_cycle() {
        // Complement of X[6] on 6 vertices is the 6-cycle; restricting to
        // {0, 1, 2} leaves the path 0-1-2 with one component.
        let c = build_xs(6, 6).unwrap().complement();
        let p = c.induced(&[0, 1, 2]);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.components(), 1);
    }

    #[test]
    fn isolated_vertices_are_components() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.components(), 4);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert!(Graph::from_json(&serde_json::json!({"m": 3, "edges": [[1, 1]]})).is_err());
        assert!(
            Graph::from_json(&serde_json::json!({"m": 3, "edges": [[1, 2], [2, 1]]})).is_err()
        );
        assert!(Graph::from_json(&serde_json::json!({"m": 3, "edges": [[0, 1]]})).is_err());
    }
}
