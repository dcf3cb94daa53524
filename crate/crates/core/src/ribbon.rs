//! Ribbon-graph model of an arc neighbourhood.
//!
//! The neighbourhood of the boundary circles and arcs deformation retracts
//! onto a graph with one vertex per boundary circle endpoint `b_0`, `b_1`.
//! Its boundary components are the faces of the rotation system, counted
//! here by direct tracing. This is independent of the cycle-count formula in
//! [`crate::surface`] and serves as a check on it.

use serde::Serialize;

use crate::surface::{ArcClass, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Dart {
    pub edge: usize,
    pub end: u8,
}

impl Dart {
    fn new(edge: usize, end: u8) -> Self {
        Dart { edge, end }
    }

    pub fn opposite(self) -> Dart {
        Dart::new(self.edge, 1 - self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RibbonGraph {
    /// Cyclic order of darts around each vertex.
    pub rotation: Vec<Vec<Dart>>,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub graph: RibbonGraph,
    pub faces: Vec<Vec<Dart>>,
}

impl RibbonGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    fn position(&self) -> Vec<[(usize, usize); 2]> {
        let mut pos = vec![[(usize::MAX, usize::MAX); 2]; self.edges];
        for (v, darts) in self.rotation.iter().enumerate() {
            for (k, d) in darts.iter().enumerate() {
                pos[d.edge][d.end as usize] = (v, k);
            }
        }
        pos
    }

    fn check(&self) {
        let pos = self.position();
        assert!(
            pos.iter().flatten().all(|&(v, _)| v != usize::MAX),
            "dart missing from rotation system"
        );
        let total: usize = self.rotation.iter().map(Vec::len).sum();
        assert_eq!(total, 2 * self.edges, "dart listed twice");
    }

    /// Faces as orbits of `d ↦ successor of ι(d)` in the rotation at its vertex.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let pos = self.position();
        let next = |d: Dart| {
            let o = d.opposite();
            let (v, k) = pos[o.edge][o.end as usize];
            let around = &self.rotation[v];
            around[(k + 1) % around.len()]
        };
        let mut seen = vec![[false; 2]; self.edges];
        let mut faces = Vec::new();
        for edge in 0..self.edges {
            for end in 0..2u8 {
                if seen[edge][end as usize] {
                    continue;
                }
                let start = Dart::new(edge, end);
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    seen[d.edge][d.end as usize] = true;
                    face.push(d);
                    d = next(d);
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }
}

/// Builds the ribbon graph of the neighbourhood of a simplex in `a`.
///
/// Arc `j` is edge `j`, leaving `b_0` in position `j`; at `b_1` the arcs
/// arrive in the order given by the permutation. The remaining two edges are
/// the boundary loops (side 2) or the two halves of the shared circle
/// (side 1).
pub fn build_ribbon(a: &ArcClass) -> RibbonGraph {
    let p = a.degree();
    let inv = a.perm.inverse();
    let x = |j: usize| Dart::new(j, 0);
    let arriving = (0..p).rev().map(|k| Dart::new(inv.apply(k), 1));
    let (first, second) = (p, p + 1);
    let (v0, v1) = match a.side {
        Side::Two => {
            let mut v0 = vec![Dart::new(first, 0)];
            v0.extend((0..p).map(x));
            v0.push(Dart::new(first, 1));
            let mut v1 = vec![Dart::new(second, 0)];
            v1.extend(arriving);
            v1.push(Dart::new(second, 1));
            (v0, v1)
        }
        Side::One => {
            let mut v0 = vec![Dart::new(first, 0)];
            v0.extend((0..p).map(x));
            v0.push(Dart::new(second, 0));
            let mut v1 = vec![Dart::new(second, 1)];
            v1.extend(arriving);
            v1.push(Dart::new(first, 1));
            (v0, v1)
        }
    };
    let graph = RibbonGraph {
        rotation: vec![v0, v1],
        edges: p + 2,
    };
    graph.check();
    graph
}

pub fn oracle_boundary_count(a: &ArcClass) -> usize {
    build_ribbon(a).face_count()
}

/// Rotation system and traced faces, for inspecting disagreements.
pub fn trace(a: &ArcClass) -> Trace {
    let graph = build_ribbon(a);
    let faces = graph.faces();
    Trace { graph, faces }
}
