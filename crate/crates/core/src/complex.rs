//! Finite directed cell complexes.
//!
//! These are the combinatorial stand-ins for pospaces: vertices (optionally
//! embedded in Q^n), directed or undirected edges, and 2-cells given as pairs
//! of parallel directed edge paths. Dipaths only ever traverse directed
//! edges; an undirected edge models an order-trivial direction and is never
//! part of a dipath.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::geom::{compare_points, OrderRelation, Point, RectRegion, RegionClass};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Directed,
    Undirected,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub id: String,
    pub coords: Option<Point>,
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub kind: EdgeKind,
}

/// A 2-cell: two parallel directed edge paths with common endpoints.
#[derive(Debug, Clone)]
pub struct Cell2 {
    pub id: String,
    pub path_a: Vec<String>,
    pub path_b: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct DiComplex {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub cells: Vec<Cell2>,
    /// True iff the directed edge graph is acyclic.
    pub loop_free: bool,
    /// Set when cycles exist: the complex is only locally ordered.
    pub local_only: bool,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub acyclic: bool,
    pub embedding_monotone: bool,
    pub face_closed: bool,
    pub cycles: Vec<Vec<String>>,
}

impl ValidationReport {
    pub fn all_good(&self) -> bool {
        self.acyclic && self.embedding_monotone && self.face_closed
    }
}

impl DiComplex {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, cells: Vec<Cell2>) -> DiComplex {
        let mut c = DiComplex {
            vertices,
            edges,
            cells,
            loop_free: true,
            local_only: false,
        };
        let report = c.validate();
        c.loop_free = report.acyclic;
        c.local_only = !report.acyclic;
        c
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex(id).is_some()
    }

    /// Out-degree / in-degree over directed edges.
    pub fn out_degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Directed && e.src == id)
            .count()
    }

    pub fn in_degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Directed && e.dst == id)
            .count()
    }

    pub(crate) fn index(&self) -> Indexed<'_> {
        Indexed::new(self)
    }

    /// Structural validation; never fails, always reports.
    pub fn validate(&self) -> ValidationReport {
        let mut face_closed = true;
        let mut v_of: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v_of.insert(v.id.as_str(), i).is_some() {
                face_closed = false; // duplicate id
            }
        }
        let mut e_of: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e_of.insert(e.id.as_str(), i).is_some() {
                face_closed = false;
            }
            if !v_of.contains_key(e.src.as_str()) || !v_of.contains_key(e.dst.as_str()) {
                face_closed = false;
            }
        }
        for cell in &self.cells {
            for path in [&cell.path_a, &cell.path_b] {
                if path.is_empty() {
                    face_closed = false;
                }
                for eid in path {
                    match e_of.get(eid.as_str()) {
                        None => face_closed = false,
                        Some(&ei) => {
                            if self.edges[ei].kind != EdgeKind::Directed {
                                face_closed = false;
                            }
                        }
                    }
                }
            }
            if let (Some(a), Some(b)) = (
                path_endpoints(self, &e_of, &cell.path_a),
                path_endpoints(self, &e_of, &cell.path_b),
            ) {
                if a != b {
                    face_closed = false;
                }
            } else {
                face_closed = false;
            }
        }

        // Embedding monotonicity: directed edges must strictly increase.
        let mut embedding_monotone = true;
        for e in &self.edges {
            if e.kind != EdgeKind::Directed {
                continue;
            }
            let (Some(sv), Some(dv)) = (self.vertex(&e.src), self.vertex(&e.dst)) else {
                continue;
            };
            if let (Some(sp), Some(dp)) = (&sv.coords, &dv.coords) {
                match compare_points(sp, dp) {
                    Ok(OrderRelation::LessEq) => {}
                    _ => embedding_monotone = false,
                }
            }
        }

        let cycles = find_cycles(self, &v_of);
        ValidationReport {
            acyclic: cycles.is_empty(),
            embedding_monotone,
            face_closed,
            cycles,
        }
    }
}

fn path_endpoints(
    c: &DiComplex,
    e_of: &BTreeMap<&str, usize>,
    path: &[String],
) -> Option<(String, String)> {
    let mut src: Option<String> = None;
    let mut cur: Option<String> = None;
    for eid in path {
        let &ei = e_of.get(eid.as_str())?;
        let e = &c.edges[ei];
        match &cur {
            None => {
                src = Some(e.src.clone());
                cur = Some(e.dst.clone());
            }
            Some(prev) => {
                if *prev != e.src {
                    return None;
                }
                cur = Some(e.dst.clone());
            }
        }
    }
    Some((src?, cur?))
}

/// DFS cycle search over directed edges; one cycle listed per back edge.
fn find_cycles(c: &DiComplex, v_of: &BTreeMap<&str, usize>) -> Vec<Vec<String>> {
    let n = c.vertices.len();
    let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (edge idx, dst)
    for (ei, e) in c.edges.iter().enumerate() {
        if e.kind != EdgeKind::Directed {
            continue;
        }
        if let (Some(&s), Some(&d)) = (v_of.get(e.src.as_str()), v_of.get(e.dst.as_str())) {
            out[s].push((ei, d));
        }
    }
    let mut color = vec![0u8; n]; // 0 white, 1 gray, 2 black
    let mut cycles: Vec<Vec<String>> = Vec::new();
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        let mut path: Vec<(usize, Option<usize>)> = vec![(start, None)];
        color[start] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < out[v].len() {
                let (ei, w) = out[v][*next];
                *next += 1;
                match color[w] {
                    0 => {
                        color[w] = 1;
                        stack.push((w, 0));
                        path.push((w, Some(ei)));
                    }
                    1 => {
                        // Back edge: reconstruct the cycle from w around to v.
                        let pos = path.iter().position(|&(pv, _)| pv == w).unwrap();
                        let mut cyc: Vec<String> = path[pos + 1..]
                            .iter()
                            .filter_map(|&(_, pe)| pe.map(|i| c.edges[i].id.clone()))
                            .collect();
                        cyc.push(c.edges[ei].id.clone());
                        cycles.push(cyc);
                    }
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
                path.pop();
            }
        }
    }
    cycles
}

/// Resolved view of a complex used by the path machinery.
pub(crate) struct Indexed<'a> {
    pub v_of: BTreeMap<&'a str, usize>,
    pub e_src: Vec<usize>,
    pub e_dst: Vec<usize>,
    /// Outgoing directed edges per vertex, sorted by edge id.
    pub out: Vec<Vec<usize>>,
}

impl<'a> Indexed<'a> {
    fn new(c: &'a DiComplex) -> Indexed<'a> {
        let mut v_of = BTreeMap::new();
        for (i, v) in c.vertices.iter().enumerate() {
            v_of.insert(v.id.as_str(), i);
        }
        let n = c.vertices.len();
        let mut e_src = Vec::with_capacity(c.edges.len());
        let mut e_dst = Vec::with_capacity(c.edges.len());
        for e in &c.edges {
            e_src.push(*v_of.get(e.src.as_str()).expect("face-closed complex"));
            e_dst.push(*v_of.get(e.dst.as_str()).expect("face-closed complex"));
        }
        let mut ids: Vec<usize> = (0..c.edges.len()).collect();
        ids.sort_by(|&a, &b| c.edges[a].id.cmp(&c.edges[b].id));
        let mut rank = vec![0usize; c.edges.len()];
        for (r, &ei) in ids.iter().enumerate() {
            rank[ei] = r;
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (ei, e) in c.edges.iter().enumerate() {
            if e.kind == EdgeKind::Directed {
                out[e_src[ei]].push(ei);
            }
        }
        for v in out.iter_mut() {
            v.sort_by_key(|&ei| rank[ei]);
        }
        let _ = rank;
        Indexed {
            v_of,
            e_src,
            e_dst,
            out,
        }
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.v_of.get(id).copied()
    }

    /// Vertices reachable from `from` along directed edges (inclusive).
    pub fn reachable(&self, from: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &ei in &self.out[v] {
                stack.push(self.e_dst[ei]);
            }
        }
        seen
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridError {
    DimensionMismatch { region: usize, lines: usize },
    UnsupportedDimension(usize),
    MissingLine { axis: usize, coord: String },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::DimensionMismatch { region, lines } => {
                write!(f, "region dimension {} but {} grid axes", region, lines)
            }
            GridError::UnsupportedDimension(d) => {
                write!(f, "grid complexes support dimension 1 and 2, got {}", d)
            }
            GridError::MissingLine { axis, coord } => {
                write!(f, "grid is missing mandatory line {} on axis {}", coord, axis)
            }
        }
    }
}

/// Builds the grid model of a rectilinear region.
///
/// Vertices are grid points not removed by the region; edges are grid
/// segments whose midpoint survives; squares are grid cells whose center
/// survives, related as right-then-up vs up-then-right. With `triangulate`
/// each retained square also gains its main diagonal and the two triangle
/// cells relating the diagonal to either L-path.
pub fn build_grid_complex(
    region: &RectRegion,
    grid_lines: &[Vec<Rat>],
    triangulate: bool,
) -> Result<DiComplex, GridError> {
    let dim = region.dim();
    if grid_lines.len() != dim {
        return Err(GridError::DimensionMismatch {
            region: dim,
            lines: grid_lines.len(),
        });
    }
    if dim == 0 || dim > 2 {
        return Err(GridError::UnsupportedDimension(dim));
    }
    let mut lines: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    for axis in 0..dim {
        let mut l = grid_lines[axis].clone();
        l.sort();
        l.dedup();
        for mandatory in region.face_coords(axis) {
            if !l.contains(&mandatory) {
                return Err(GridError::MissingLine {
                    axis,
                    coord: format!("{}", mandatory),
                });
            }
        }
        lines.push(l);
    }

    let keeps = |p: &Point| {
        matches!(
            region.classify(p),
            Ok(RegionClass::Inside) | Ok(RegionClass::OnForbiddenBoundary)
        )
    };
    let half = |a: &Rat, b: &Rat| (a + b) / Rat::int(2);

    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut cells: Vec<Cell2> = Vec::new();

    if dim == 1 {
        let xs = &lines[0];
        let mut present = vec![false; xs.len()];
        for (i, x) in xs.iter().enumerate() {
            let p = Point::new(vec![x.clone()]);
            if keeps(&p) {
                present[i] = true;
                vertices.push(Vertex {
                    id: format!("v{}", i),
                    coords: Some(p),
                });
            }
        }
        for i in 0..xs.len().saturating_sub(1) {
            if !(present[i] && present[i + 1]) {
                continue;
            }
            let mid = Point::new(vec![half(&xs[i], &xs[i + 1])]);
            if keeps(&mid) {
                edges.push(Edge {
                    id: format!("h{}", i),
                    src: format!("v{}", i),
                    dst: format!("v{}", i + 1),
                    kind: EdgeKind::Directed,
                });
            }
        }
        return Ok(DiComplex::new(vertices, edges, cells));
    }

    let xs = &lines[0];
    let ys = &lines[1];
    let nx = xs.len();
    let ny = ys.len();
    let vid = |i: usize, j: usize| format!("v{}_{}", i, j);
    let mut present = vec![vec![false; ny]; nx];
    for i in 0..nx {
        for j in 0..ny {
            let p = Point::new(vec![xs[i].clone(), ys[j].clone()]);
            if keeps(&p) {
                present[i][j] = true;
                vertices.push(Vertex {
                    id: vid(i, j),
                    coords: Some(p),
                });
            }
        }
    }
    let mut h_present = vec![vec![false; ny]; nx];
    let mut u_present = vec![vec![false; ny]; nx];
    for i in 0..nx {
        for j in 0..ny {
            if i + 1 < nx && present[i][j] && present[i + 1][j] {
                let mid = Point::new(vec![half(&xs[i], &xs[i + 1]), ys[j].clone()]);
                if keeps(&mid) {
                    h_present[i][j] = true;
                    edges.push(Edge {
                        id: format!("h{}_{}", i, j),
                        src: vid(i, j),
                        dst: vid(i + 1, j),
                        kind: EdgeKind::Directed,
                    });
                }
            }
            if j + 1 < ny && present[i][j] && present[i][j + 1] {
                let mid = Point::new(vec![xs[i].clone(), half(&ys[j], &ys[j + 1])]);
                if keeps(&mid) {
                    u_present[i][j] = true;
                    edges.push(Edge {
                        id: format!("u{}_{}", i, j),
                        src: vid(i, j),
                        dst: vid(i, j + 1),
                        kind: EdgeKind::Directed,
                    });
                }
            }
        }
    }
    for i in 0..nx.saturating_sub(1) {
        for j in 0..ny.saturating_sub(1) {
            let all_edges = h_present[i][j]
                && u_present[i + 1][j]
                && u_present[i][j]
                && h_present[i][j + 1];
            if !all_edges {
                continue;
            }
            let center = Point::new(vec![half(&xs[i], &xs[i + 1]), half(&ys[j], &ys[j + 1])]);
            if !keeps(&center) {
                continue;
            }
            let right_up = vec![format!("h{}_{}", i, j), format!("u{}_{}", i + 1, j)];
            let up_right = vec![format!("u{}_{}", i, j), format!("h{}_{}", i, j + 1)];
            cells.push(Cell2 {
                id: format!("s{}_{}", i, j),
                path_a: right_up.clone(),
                path_b: up_right.clone(),
            });
            if triangulate {
                let d = format!("d{}_{}", i, j);
                edges.push(Edge {
                    id: d.clone(),
                    src: vid(i, j),
                    dst: vid(i + 1, j + 1),
                    kind: EdgeKind::Directed,
                });
                cells.push(Cell2 {
                    id: format!("t{}_{}a", i, j),
                    path_a: vec![d.clone()],
                    path_b: right_up,
                });
                cells.push(Cell2 {
                    id: format!("t{}_{}b", i, j),
                    path_a: vec![d],
                    path_b: up_right,
                });
            }
        }
    }
    Ok(DiComplex::new(vertices, edges, cells))
}

/// The stock spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardSpace {
    /// Directed unit interval: 2 vertices, 1 edge.
    DI,
    /// Directed unit square on the default 2x2 grid.
    DII,
    /// Two directed intervals attached at their midpoints.
    DX,
    /// Two parallel directed edges (the ordered circle).
    DO,
    /// Directed circle: a 3-cycle; local pospace only.
    DS1,
    /// Directed unit square on a k x k grid.
    DIIGrid(u32),
    /// Directed interval subdivided into k segments.
    DIGrid(u32),
}

pub fn standard_space(which: StandardSpace) -> DiComplex {
    match which {
        StandardSpace::DI => standard_space(StandardSpace::DIGrid(1)),
        StandardSpace::DII => standard_space(StandardSpace::DIIGrid(2)),
        StandardSpace::DIIGrid(k) => {
            let k = k.max(1) as i64;
            let lines: Vec<Rat> = (0..=k).map(|i| Rat::new(i, k)).collect();
            build_grid_complex(&RectRegion::unit_cube(2), &[lines.clone(), lines], false)
                .expect("unit grid is well-formed")
        }
        StandardSpace::DIGrid(k) => {
            let k = k.max(1) as i64;
            let lines: Vec<Rat> = (0..=k).map(|i| Rat::new(i, k)).collect();
            build_grid_complex(&RectRegion::unit_cube(1), &[lines], false)
                .expect("unit grid is well-formed")
        }
        StandardSpace::DX => {
            let v = |id: &str| Vertex {
                id: id.to_string(),
                coords: None,
            };
            let e = |id: &str, s: &str, d: &str| Edge {
                id: id.to_string(),
                src: s.to_string(),
                dst: d.to_string(),
                kind: EdgeKind::Directed,
            };
            DiComplex::new(
                vec![v("a1"), v("a2"), v("b1"), v("b2"), v("m")],
                vec![
                    e("e_a1m", "a1", "m"),
                    e("e_a2m", "a2", "m"),
                    e("e_mb1", "m", "b1"),
                    e("e_mb2", "m", "b2"),
                ],
                Vec::new(),
            )
        }
        StandardSpace::DO => {
            let v = |id: &str| Vertex {
                id: id.to_string(),
                coords: None,
            };
            let e = |id: &str, s: &str, d: &str| Edge {
                id: id.to_string(),
                src: s.to_string(),
                dst: d.to_string(),
                kind: EdgeKind::Directed,
            };
            DiComplex::new(
                vec![v("a"), v("b")],
                vec![e("e0", "a", "b"), e("e1", "a", "b")],
                Vec::new(),
            )
        }
        StandardSpace::DS1 => {
            let v = |id: &str| Vertex {
                id: id.to_string(),
                coords: None,
            };
            let e = |id: &str, s: &str, d: &str| Edge {
                id: id.to_string(),
                src: s.to_string(),
                dst: d.to_string(),
                kind: EdgeKind::Directed,
            };
            DiComplex::new(
                vec![v("u0"), v("u1"), v("u2")],
                vec![e("e0", "u0", "u1"), e("e1", "u1", "u2"), e("e2", "u2", "u0")],
                Vec::new(),
            )
        }
    }
}

/// A complex with a marked context.
#[derive(Debug, Clone)]
pub struct ContextedComplex {
    pub space: DiComplex,
    pub context: DiComplex,
    /// context vertex id -> space vertex id
    pub marking: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkingError {
    UnknownSpaceVertex { context: String, target: String },
    Unmarked { context: String },
    EdgeNotPreserved { context_edge: String },
}

impl fmt::Display for MarkingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkingError::UnknownSpaceVertex { context, target } => {
                write!(f, "marking of {} targets unknown vertex {}", context, target)
            }
            MarkingError::Unmarked { context } => {
                write!(f, "context vertex {} has no marking", context)
            }
            MarkingError::EdgeNotPreserved { context_edge } => {
                write!(
                    f,
                    "context edge {} is not preserved as reachability",
                    context_edge
                )
            }
        }
    }
}

/// A discrete context with the given vertex names.
pub fn discrete_context(ids: &[&str]) -> DiComplex {
    DiComplex::new(
        ids.iter()
            .map(|id| Vertex {
                id: id.to_string(),
                coords: None,
            })
            .collect(),
        Vec::new(),
        Vec::new(),
    )
}

pub fn mark_context(
    space: DiComplex,
    context: DiComplex,
    marking: BTreeMap<String, String>,
) -> Result<ContextedComplex, MarkingError> {
    for v in &context.vertices {
        match marking.get(&v.id) {
            None => {
                return Err(MarkingError::Unmarked {
                    context: v.id.clone(),
                })
            }
            Some(target) => {
                if !space.has_vertex(target) {
                    return Err(MarkingError::UnknownSpaceVertex {
                        context: v.id.clone(),
                        target: target.clone(),
                    });
                }
            }
        }
    }
    // Directed context edges must be preserved as reachability.
    let idx = space.index();
    for e in &context.edges {
        if e.kind != EdgeKind::Directed {
            continue;
        }
        let (Some(su), Some(du)) = (marking.get(&e.src), marking.get(&e.dst)) else {
            continue;
        };
        let (Some(s), Some(d)) = (idx.vertex_index(su), idx.vertex_index(du)) else {
            continue;
        };
        if !idx.reachable(s).contains(&d) {
            return Err(MarkingError::EdgeNotPreserved {
                context_edge: e.id.clone(),
            });
        }
    }
    Ok(ContextedComplex {
        space,
        context,
        marking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::rat::{rat, ri};

    #[test]
    fn unit_square_trivial_grid() {
        let region = RectRegion::unit_cube(2);
        let lines = vec![vec![ri(0), ri(1)], vec![ri(0), ri(1)]];
        let c = build_grid_complex(&region, &lines, false).unwrap();
        assert_eq!(c.vertices.len(), 4);
        assert_eq!(c.edges.len(), 4);
        assert_eq!(c.cells.len(), 1);
        assert!(c.validate().all_good());
    }

    #[test]
    fn missing_mandatory_line_is_an_error() {
        let region = models::square_removed_region();
        let lines = vec![vec![ri(0), ri(1)], vec![ri(0), ri(1)]];
        match build_grid_complex(&region, &lines, false) {
            Err(GridError::MissingLine { .. }) => {}
            other => panic!("expected missing-line error, got {:?}", other),
        }
    }

    #[test]
    fn square_removed_grid_counts() {
        let c = models::square_removed_grid();
        // 4x4 grid points, all retained; center cell absent, boundary kept.
        assert_eq!(c.vertices.len(), 16);
        assert_eq!(c.edges.len(), 24);
        assert_eq!(c.cells.len(), 8);
        assert!(c.validate().all_good());
    }

    #[test]
    fn swiss_grid_structure() {
        let c = models::swiss_grid();
        assert_eq!(c.vertices.len(), 36);
        // Interior walls of the cross are gone.
        assert!(c.edge("h2_2").is_none(), "edge out of c into the cross");
        assert!(c.edge("u2_2").is_none());
        // c has no way out, d has no way in.
        assert_eq!(c.out_degree("v2_2"), 0);
        assert_eq!(c.in_degree("v3_3"), 0);
        // Center and arm cells absent.
        for missing in ["s2_2", "s1_2", "s3_2", "s2_1", "s2_3"] {
            assert!(c.cells.iter().all(|cell| cell.id != missing));
        }
        assert_eq!(c.cells.len(), 25 - 5);
        assert!(c.validate().all_good());
    }

    #[test]
    fn standard_spaces() {
        let di = standard_space(StandardSpace::DI);
        assert_eq!((di.vertices.len(), di.edges.len()), (2, 1));
        let dii = standard_space(StandardSpace::DII);
        assert_eq!(dii.vertices.len(), 9);
        assert_eq!(dii.cells.len(), 4);
        let dx = standard_space(StandardSpace::DX);
        assert_eq!(dx.in_degree("m"), 2);
        assert_eq!(dx.out_degree("m"), 2);
        let do_ = standard_space(StandardSpace::DO);
        assert_eq!(do_.edges.len(), 2);
        assert!(do_.loop_free);
        let ds1 = standard_space(StandardSpace::DS1);
        assert!(!ds1.loop_free);
        assert!(ds1.local_only);
        let report = ds1.validate();
        assert!(!report.acyclic);
        assert!(!report.cycles.is_empty());
        assert_eq!(report.cycles[0].len(), 3);
    }

    #[test]
    fn non_monotone_embedding_detected() {
        let c = DiComplex::new(
            vec![
                Vertex {
                    id: "p".into(),
                    coords: Some(Point::new(vec![ri(1), ri(0)])),
                },
                Vertex {
                    id: "q".into(),
                    coords: Some(Point::new(vec![ri(0), ri(1)])),
                },
            ],
            vec![Edge {
                id: "e".into(),
                src: "p".into(),
                dst: "q".into(),
                kind: EdgeKind::Directed,
            }],
            Vec::new(),
        );
        let report = c.validate();
        assert!(!report.embedding_monotone);
        assert!(report.acyclic);
    }

    #[test]
    fn marking_must_target_existing_vertices() {
        let space = standard_space(StandardSpace::DI);
        let ctx = discrete_context(&["a", "b"]);
        let mut marking = BTreeMap::new();
        marking.insert("a".to_string(), "v0".to_string());
        marking.insert("b".to_string(), "nope".to_string());
        match mark_context(space, ctx, marking) {
            Err(MarkingError::UnknownSpaceVertex { .. }) => {}
            other => panic!("expected marking error, got {:?}", other),
        }
    }

    #[test]
    fn reachability_is_a_partial_order_when_loop_free() {
        let c = models::swiss_grid();
        let idx = c.index();
        let n = c.vertices.len();
        let reach: Vec<_> = (0..n).map(|v| idx.reachable(v)).collect();
        for a in 0..n {
            assert!(reach[a].contains(&a));
            for b in 0..n {
                if a != b && reach[a].contains(&b) {
                    assert!(!reach[b].contains(&a), "antisymmetry violated");
                }
                for cc in 0..n {
                    if reach[a].contains(&b) && reach[b].contains(&cc) {
                        assert!(reach[a].contains(&cc), "transitivity violated");
                    }
                }
            }
        }
    }

    #[test]
    fn richer_region_cells_are_a_superset_after_adding_a_box() {
        let base = RectRegion::unit_cube(2);
        let poorer = models::square_removed_region();
        let lines = vec![
            vec![ri(0), rat(1, 3), rat(2, 3), ri(1)],
            vec![ri(0), rat(1, 3), rat(2, 3), ri(1)],
        ];
        let rich = build_grid_complex(&base, &lines, false).unwrap();
        let poor = build_grid_complex(&poorer, &lines, false).unwrap();
        let rich_cells: BTreeSet<_> = rich.cells.iter().map(|c| c.id.clone()).collect();
        for cell in &poor.cells {
            assert!(rich_cells.contains(&cell.id));
        }
    }
}
