//! The fundamental category of a directed complex.
//!
//! Dipaths between two vertices are enumerated exhaustively and quotiented
//! by elementary flips: replacing one side of a 2-cell by the other inside a
//! path. Hom-sets are the connected components of that flip graph. Class
//! computation is a plain BFS over the complete path set; path counts at the
//! scales in scope stay small and determinism matters more than cleverness.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ContextedComplex, DiComplex, EdgeKind};

/// A directed edge path between two vertices. The empty path is the identity
/// at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dipath {
    pub source: String,
    pub target: String,
    pub edges: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FundcatError {
    UnknownVertex(String),
    UnknownEdge(String),
    /// Cyclic complex and no length bound supplied.
    NeedsBound,
    EndpointMismatch,
    NotAPath,
}

impl fmt::Display for FundcatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FundcatError::UnknownVertex(v) => write!(f, "unknown vertex {}", v),
            FundcatError::UnknownEdge(e) => write!(f, "unknown edge {}", e),
            FundcatError::NeedsBound => {
                write!(f, "cyclic complex: bounded enumeration requires --max-len")
            }
            FundcatError::EndpointMismatch => write!(f, "paths do not share endpoints"),
            FundcatError::NotAPath => write!(f, "edge sequence is not a directed path here"),
        }
    }
}

/// All dipaths from `x` to `y`, in lexicographic edge-id order. A cyclic
/// complex requires `max_len`.
pub fn enumerate_dipaths(
    c: &DiComplex,
    x: &str,
    y: &str,
    max_len: Option<usize>,
) -> Result<Vec<Dipath>, FundcatError> {
    let idx = c.index();
    let xs = idx
        .vertex_index(x)
        .ok_or_else(|| FundcatError::UnknownVertex(x.to_string()))?;
    let ys = idx
        .vertex_index(y)
        .ok_or_else(|| FundcatError::UnknownVertex(y.to_string()))?;
    if !c.loop_free && max_len.is_none() {
        return Err(FundcatError::NeedsBound);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    // Depth-first, out-edges in id order, so paths come out lexicographically
    // sorted by edge-id sequence (prefixes first).
    fn dfs(
        idx: &crate::complex::Indexed<'_>,
        v: usize,
        target: usize,
        max_len: Option<usize>,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == target {
            out.push(stack.clone());
        }
        if let Some(m) = max_len {
            if stack.len() >= m {
                return;
            }
        }
        for &ei in &idx.out[v] {
            stack.push(ei);
            dfs(idx, idx.e_dst[ei], target, max_len, stack, out);
            stack.pop();
        }
    }
    dfs(&idx, xs, ys, max_len, &mut stack, &mut out);
    Ok(out
        .into_iter()
        .map(|edges| Dipath {
            source: x.to_string(),
            target: y.to_string(),
            edges: edges
                .into_iter()
                .map(|ei| c.edges[ei].id.clone())
                .collect(),
        })
        .collect())
}

/// Cell sides as edge-index sequences, for flip scanning.
struct FlipTable {
    sides: Vec<(Vec<usize>, Vec<usize>)>,
}

impl FlipTable {
    fn new(c: &DiComplex) -> FlipTable {
        let mut e_of: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, e) in c.edges.iter().enumerate() {
            e_of.insert(e.id.as_str(), i);
        }
        let mut sides = Vec::new();
        for cell in &c.cells {
            let a: Option<Vec<usize>> = cell
                .path_a
                .iter()
                .map(|id| e_of.get(id.as_str()).copied())
                .collect();
            let b: Option<Vec<usize>> = cell
                .path_b
                .iter()
                .map(|id| e_of.get(id.as_str()).copied())
                .collect();
            if let (Some(a), Some(b)) = (a, b) {
                if a != b {
                    sides.push((a, b));
                }
            }
        }
        FlipTable { sides }
    }

    /// All single-flip rewrites of `path`.
    fn neighbors(&self, path: &[usize]) -> Vec<Vec<usize>> {
        let mut result = Vec::new();
        for (a, b) in &self.sides {
            substitute_all(path, a, b, &mut result);
            substitute_all(path, b, a, &mut result);
        }
        result
    }
}

fn substitute_all(path: &[usize], from: &[usize], to: &[usize], out: &mut Vec<Vec<usize>>) {
    if from.is_empty() || from.len() > path.len() {
        return;
    }
    for start in 0..=(path.len() - from.len()) {
        if &path[start..start + from.len()] == from {
            let mut new_path = Vec::with_capacity(path.len() - from.len() + to.len());
            new_path.extend_from_slice(&path[..start]);
            new_path.extend_from_slice(to);
            new_path.extend_from_slice(&path[start + from.len()..]);
            out.push(new_path);
        }
    }
}

fn path_to_indices(c: &DiComplex, p: &Dipath) -> Result<Vec<usize>, FundcatError> {
    let idx = c.index();
    let mut cur = idx
        .vertex_index(&p.source)
        .ok_or_else(|| FundcatError::UnknownVertex(p.source.clone()))?;
    let mut out = Vec::with_capacity(p.edges.len());
    for eid in &p.edges {
        let ei = c
            .edges
            .iter()
            .position(|e| &e.id == eid)
            .ok_or_else(|| FundcatError::UnknownEdge(eid.clone()))?;
        if c.edges[ei].kind != EdgeKind::Directed || idx.e_src[ei] != cur {
            return Err(FundcatError::NotAPath);
        }
        cur = idx.e_dst[ei];
        out.push(ei);
    }
    let target = idx
        .vertex_index(&p.target)
        .ok_or_else(|| FundcatError::UnknownVertex(p.target.clone()))?;
    if cur != target {
        return Err(FundcatError::NotAPath);
    }
    Ok(out)
}

/// Are two parallel dipaths related by a sequence of elementary flips?
pub fn dihomotopic(c: &DiComplex, p: &Dipath, q: &Dipath) -> Result<bool, FundcatError> {
    if p.source != q.source || p.target != q.target {
        return Err(FundcatError::EndpointMismatch);
    }
    if !c.loop_free {
        return Err(FundcatError::NeedsBound);
    }
    let pi = path_to_indices(c, p)?;
    let qi = path_to_indices(c, q)?;
    if pi == qi {
        return Ok(true);
    }
    let table = FlipTable::new(c);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(pi.clone());
    queue.push_back(pi);
    while let Some(cur) = queue.pop_front() {
        for next in table.neighbors(&cur) {
            if next == qi {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// One dihomotopy class in a hom-set.
#[derive(Debug, Clone)]
pub struct HomClass {
    pub id: usize,
    /// Lexicographically least member by edge-id sequence.
    pub representative: Dipath,
    pub size: usize,
}

#[derive(Debug, Clone)]
pub struct HomSet {
    pub source: String,
    pub target: String,
    pub classes: Vec<HomClass>,
    pub path_count: usize,
    /// Set when the enumeration was length-bounded (cyclic complexes); the
    /// result is then not a fundamental-category hom-set.
    pub bounded: bool,
}

impl HomSet {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id containing the given path, if enumerated.
    pub fn class_of(&self, c: &DiComplex, path: &Dipath) -> Result<Option<usize>, FundcatError> {
        for class in &self.classes {
            if dihomotopic(c, &class.representative, path)? {
                return Ok(Some(class.id));
            }
        }
        Ok(None)
    }
}

/// The hom-set of the fundamental category between two vertices: flip-graph
/// components over the full enumerated path set.
pub fn hom_set(
    c: &DiComplex,
    x: &str,
    y: &str,
    max_len: Option<usize>,
) -> Result<HomSet, FundcatError> {
    let paths = enumerate_dipaths(c, x, y, max_len)?;
    let indexed: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| path_to_indices(c, p).expect("enumerated path is valid"))
        .collect();
    let pos: BTreeMap<&[usize], usize> = indexed
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let table = FlipTable::new(c);
    let mut component = vec![usize::MAX; paths.len()];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..paths.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let comp_id = comps.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        component[start] = comp_id;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for next in table.neighbors(&indexed[i]) {
                // With bounded enumeration a flip may leave the universe;
                // the quotient is taken within the enumerated set.
                if let Some(&j) = pos.get(next.as_slice()) {
                    if component[j] == usize::MAX {
                        component[j] = comp_id;
                        queue.push_back(j);
                    }
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    // Canonical representative: least member. Enumeration order is already
    // the lexicographic id order, so the least index is the least path.
    let mut classes: Vec<(usize, usize)> = comps
        .iter()
        .enumerate()
        .map(|(ci, members)| (members[0], ci))
        .collect();
    classes.sort();
    let classes: Vec<HomClass> = classes
        .into_iter()
        .enumerate()
        .map(|(new_id, (rep_idx, ci))| HomClass {
            id: new_id,
            representative: paths[rep_idx].clone(),
            size: comps[ci].len(),
        })
        .collect();
    Ok(HomSet {
        source: x.to_string(),
        target: y.to_string(),
        path_count: paths.len(),
        bounded: max_len.is_some() && !c.loop_free || max_len.is_some(),
        classes,
    })
}

/// A combinatorial map between complexes: vertices to vertices, directed
/// edges to directed paths (empty allowed when the endpoints collapse).
#[derive(Debug, Clone, Default)]
pub struct CombMap {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombMapError {
    MissingVertex(String),
    UnknownTargetVertex(String),
    MissingEdgeRoute(String),
    BadRoute { edge: String, reason: String },
}

impl fmt::Display for CombMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombMapError::MissingVertex(v) => write!(f, "no image for vertex {}", v),
            CombMapError::UnknownTargetVertex(v) => write!(f, "image vertex {} not in target", v),
            CombMapError::MissingEdgeRoute(e) => write!(f, "no route for edge {}", e),
            CombMapError::BadRoute { edge, reason } => {
                write!(f, "route of edge {} invalid: {}", edge, reason)
            }
        }
    }
}

impl CombMap {
    pub fn identity(c: &DiComplex) -> CombMap {
        CombMap {
            vertex_map: c
                .vertices
                .iter()
                .map(|v| (v.id.clone(), v.id.clone()))
                .collect(),
            edge_map: c
                .edges
                .iter()
                .map(|e| (e.id.clone(), vec![e.id.clone()]))
                .collect(),
        }
    }

    pub fn vertex_image(&self, v: &str) -> Option<&String> {
        self.vertex_map.get(v)
    }

    /// Routes a dipath through the map.
    pub fn route_path(&self, p: &Dipath) -> Result<Dipath, CombMapError> {
        let mut edges = Vec::new();
        for e in &p.edges {
            let route = self
                .edge_map
                .get(e)
                .ok_or_else(|| CombMapError::MissingEdgeRoute(e.clone()))?;
            edges.extend(route.iter().cloned());
        }
        Ok(Dipath {
            source: self
                .vertex_map
                .get(&p.source)
                .cloned()
                .ok_or_else(|| CombMapError::MissingVertex(p.source.clone()))?,
            target: self
                .vertex_map
                .get(&p.target)
                .cloned()
                .ok_or_else(|| CombMapError::MissingVertex(p.target.clone()))?,
            edges,
        })
    }

    /// Checks totality and endpoint compatibility against source and target.
    pub fn validate(&self, src: &DiComplex, dst: &DiComplex) -> Result<(), CombMapError> {
        let dst_idx = dst.index();
        for v in &src.vertices {
            let img = self
                .vertex_map
                .get(&v.id)
                .ok_or_else(|| CombMapError::MissingVertex(v.id.clone()))?;
            if !dst.has_vertex(img) {
                return Err(CombMapError::UnknownTargetVertex(img.clone()));
            }
        }
        for e in &src.edges {
            if e.kind != EdgeKind::Directed {
                // Undirected edges must collapse or map along one undirected
                // edge; they are never traversed by dipaths.
                if let Some(route) = self.edge_map.get(&e.id) {
                    if route.len() > 1 {
                        return Err(CombMapError::BadRoute {
                            edge: e.id.clone(),
                            reason: "undirected edge route must have length <= 1".into(),
                        });
                    }
                }
                continue;
            }
            let route = self
                .edge_map
                .get(&e.id)
                .ok_or_else(|| CombMapError::MissingEdgeRoute(e.id.clone()))?;
            let want_src = &self.vertex_map[&e.src];
            let want_dst = &self.vertex_map[&e.dst];
            let mut cur = want_src.clone();
            for rid in route {
                let Some(re) = dst.edge(rid) else {
                    return Err(CombMapError::BadRoute {
                        edge: e.id.clone(),
                        reason: alloc::format!("unknown target edge {}", rid),
                    });
                };
                if re.kind != EdgeKind::Directed || re.src != cur {
                    return Err(CombMapError::BadRoute {
                        edge: e.id.clone(),
                        reason: alloc::format!("route breaks at {}", rid),
                    });
                }
                cur = re.dst.clone();
            }
            if &cur != want_dst {
                return Err(CombMapError::BadRoute {
                    edge: e.id.clone(),
                    reason: "route endpoints do not match vertex images".into(),
                });
            }
            let _ = dst_idx;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum FunctorError {
    Map(CombMapError),
    Fundcat(FundcatError),
    /// A 2-cell whose two routed sides are not dihomotopic in the target.
    CellNotRespected { cell: String },
}

impl fmt::Display for FunctorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorError::Map(e) => write!(f, "{}", e),
            FunctorError::Fundcat(e) => write!(f, "{}", e),
            FunctorError::CellNotRespected { cell } => {
                write!(f, "2-cell {} is not respected by the map", cell)
            }
        }
    }
}

impl From<CombMapError> for FunctorError {
    fn from(e: CombMapError) -> FunctorError {
        FunctorError::Map(e)
    }
}

impl From<FundcatError> for FunctorError {
    fn from(e: FundcatError) -> FunctorError {
        FunctorError::Fundcat(e)
    }
}

/// Verifies that routed cell sides stay dihomotopic (the functor condition).
pub fn respects_cells(f: &CombMap, src: &DiComplex, dst: &DiComplex) -> Result<(), FunctorError> {
    let e_of: BTreeMap<&str, &crate::complex::Edge> =
        src.edges.iter().map(|e| (e.id.as_str(), e)).collect();
    for cell in &src.cells {
        let route = |path: &[String]| -> Result<Dipath, FunctorError> {
            let first = e_of.get(path[0].as_str()).expect("validated cell");
            let last = e_of.get(path[path.len() - 1].as_str()).expect("validated cell");
            f.route_path(&Dipath {
                source: first.src.clone(),
                target: last.dst.clone(),
                edges: path.to_vec(),
            })
            .map_err(FunctorError::from)
        };
        let ra = route(&cell.path_a)?;
        let rb = route(&cell.path_b)?;
        if !dihomotopic(dst, &ra, &rb)? {
            return Err(FunctorError::CellNotRespected {
                cell: cell.id.clone(),
            });
        }
    }
    Ok(())
}

/// The functor's action on one hom-set.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub target: HomSet,
    /// source class id -> target class id
    pub class_map: BTreeMap<usize, usize>,
}

pub fn induced_map(
    f: &CombMap,
    src: &DiComplex,
    dst: &DiComplex,
    hom: &HomSet,
) -> Result<InducedMap, FunctorError> {
    f.validate(src, dst)?;
    respects_cells(f, src, dst)?;
    let tx = f
        .vertex_map
        .get(&hom.source)
        .ok_or_else(|| CombMapError::MissingVertex(hom.source.clone()))?;
    let ty = f
        .vertex_map
        .get(&hom.target)
        .ok_or_else(|| CombMapError::MissingVertex(hom.target.clone()))?;
    let target = hom_set(dst, tx, ty, None)?;
    let mut class_map = BTreeMap::new();
    for class in &hom.classes {
        let image = f.route_path(&class.representative)?;
        let tc = target
            .class_of(dst, &image)?
            .expect("image path must be enumerated in target hom-set");
        class_map.insert(class.id, tc);
    }
    Ok(InducedMap { target, class_map })
}

/// Witness for a failed necessary condition.
#[derive(Debug, Clone)]
pub struct ObstructionWitness {
    /// The ordered context pair (a, b).
    pub a: String,
    pub b: String,
    pub hom_b_classes: usize,
    pub hom_c_classes: usize,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub enum ObstructionVerdict {
    NecessaryConditionsPass,
    ObstructionFound(ObstructionWitness),
}

impl ObstructionVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, ObstructionVerdict::NecessaryConditionsPass)
    }
}

#[derive(Debug, Clone)]
pub enum ObstructionError {
    ContextMismatch,
    NotContextPreserving { context: String },
    Functor(FunctorError),
    Fundcat(FundcatError),
}

impl fmt::Display for ObstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionError::ContextMismatch => write!(f, "contexts differ"),
            ObstructionError::NotContextPreserving { context } => {
                write!(f, "map does not preserve the marking of {}", context)
            }
            ObstructionError::Functor(e) => write!(f, "{}", e),
            ObstructionError::Fundcat(e) => write!(f, "{}", e),
        }
    }
}

impl From<FundcatError> for ObstructionError {
    fn from(e: FundcatError) -> ObstructionError {
        ObstructionError::Fundcat(e)
    }
}

impl From<FunctorError> for ObstructionError {
    fn from(e: FunctorError) -> ObstructionError {
        ObstructionError::Functor(e)
    }
}

/// Runs the fundamental-category necessary condition for an equivalence
/// rel A between two marked complexes.
///
/// With a candidate map, every context pair's induced hom-set map must be a
/// bijection. Without one, only obstructions valid for *every* dimap are
/// reported: an ordered context pair whose hom-set is empty on one side and
/// forced nonempty on the other. Passing is never evidence of equivalence.
pub fn equivalence_obstruction(
    b: &ContextedComplex,
    c: &ContextedComplex,
    f: Option<&CombMap>,
) -> Result<ObstructionVerdict, ObstructionError> {
    let b_ctx: BTreeSet<&String> = b.context.vertices.iter().map(|v| &v.id).collect();
    let c_ctx: BTreeSet<&String> = c.context.vertices.iter().map(|v| &v.id).collect();
    if b_ctx != c_ctx {
        return Err(ObstructionError::ContextMismatch);
    }
    if let Some(f) = f {
        for a in &b_ctx {
            let src_pt = &b.marking[*a];
            let want = &c.marking[*a];
            match f.vertex_map.get(src_pt) {
                Some(got) if got == want => {}
                _ => {
                    return Err(ObstructionError::NotContextPreserving {
                        context: (*a).clone(),
                    })
                }
            }
        }
        respects_cells(f, &b.space, &c.space)?;
    }
    for a1 in &b_ctx {
        for a2 in &b_ctx {
            let hb = hom_set(&b.space, &b.marking[*a1], &b.marking[*a2], None)?;
            let hc = hom_set(&c.space, &c.marking[*a1], &c.marking[*a2], None)?;
            match f {
                None => {
                    if hb.is_empty() != hc.is_empty() {
                        return Ok(ObstructionVerdict::ObstructionFound(ObstructionWitness {
                            a: (*a1).clone(),
                            b: (*a2).clone(),
                            hom_b_classes: hb.class_count(),
                            hom_c_classes: hc.class_count(),
                            detail: "hom-set empty on one side only; no dimap can induce a bijection".into(),
                        }));
                    }
                }
                Some(f) => {
                    let induced = induced_map(f, &b.space, &c.space, &hb)?;
                    debug_assert_eq!(induced.target.class_count(), hc.class_count());
                    let image: BTreeSet<usize> = induced.class_map.values().copied().collect();
                    let injective = image.len() == induced.class_map.len();
                    let surjective = image.len() == induced.target.class_count();
                    if !(injective && surjective) {
                        return Ok(ObstructionVerdict::ObstructionFound(ObstructionWitness {
                            a: (*a1).clone(),
                            b: (*a2).clone(),
                            hom_b_classes: hb.class_count(),
                            hom_c_classes: hc.class_count(),
                            detail: if injective {
                                "induced hom-set map is not surjective".into()
                            } else {
                                "induced hom-set map is not injective".into()
                            },
                        }));
                    }
                }
            }
        }
    }
    Ok(ObstructionVerdict::NecessaryConditionsPass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        discrete_context, mark_context, standard_space, StandardSpace,
    };
    use crate::models;

    fn marking(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn do_has_two_paths_and_two_classes() {
        let c = standard_space(StandardSpace::DO);
        let paths = enumerate_dipaths(&c, "a", "b", None).unwrap();
        assert_eq!(paths.len(), 2);
        let h = hom_set(&c, "a", "b", None).unwrap();
        assert_eq!(h.class_count(), 2);
        assert!(!dihomotopic(&c, &paths[0], &paths[1]).unwrap());
    }

    #[test]
    fn dii_grid_paths_connect() {
        let c = standard_space(StandardSpace::DII);
        let paths = enumerate_dipaths(&c, "v0_0", "v2_2", None).unwrap();
        assert_eq!(paths.len(), 6, "C(4,2) monotone lattice paths");
        let h = hom_set(&c, "v0_0", "v2_2", None).unwrap();
        assert_eq!(h.class_count(), 1);
        assert_eq!(h.path_count, 6);
        // right-right-up-up vs up-up-right-right
        let rruu = Dipath {
            source: "v0_0".into(),
            target: "v2_2".into(),
            edges: vec!["h0_0".into(), "h1_0".into(), "u2_0".into(), "u2_1".into()],
        };
        let uurr = Dipath {
            source: "v0_0".into(),
            target: "v2_2".into(),
            edges: vec!["u0_0".into(), "u0_1".into(), "h0_2".into(), "h1_2".into()],
        };
        assert!(dihomotopic(&c, &rruu, &uurr).unwrap());
        assert!(dihomotopic(&c, &rruu, &rruu).unwrap());
    }

    #[test]
    fn ds1_bounded_enumeration() {
        let c = standard_space(StandardSpace::DS1);
        assert!(matches!(
            enumerate_dipaths(&c, "u0", "u0", None),
            Err(FundcatError::NeedsBound)
        ));
        let paths = enumerate_dipaths(&c, "u0", "u0", Some(3)).unwrap();
        // identity and the single 3-loop; nothing of length 1 or 2.
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].edges.len(), 0);
        assert_eq!(paths[1].edges.len(), 3);
        let h = hom_set(&c, "u0", "u0", Some(3)).unwrap();
        assert!(h.bounded);
        assert_eq!(h.class_count(), 2);
    }

    #[test]
    fn dx_hom_table() {
        let c = standard_space(StandardSpace::DX);
        assert_eq!(hom_set(&c, "a1", "b2", None).unwrap().class_count(), 1);
        assert_eq!(hom_set(&c, "a1", "a2", None).unwrap().class_count(), 0);
    }

    #[test]
    fn induced_map_collapses_do_classes() {
        // dO -> dI: both parallel edges route onto the single edge.
        let d_o = standard_space(StandardSpace::DO);
        let d_i = standard_space(StandardSpace::DI);
        let f = CombMap {
            vertex_map: marking(&[("a", "v0"), ("b", "v1")]),
            edge_map: [
                ("e0".to_string(), vec!["h0".to_string()]),
                ("e1".to_string(), vec!["h0".to_string()]),
            ]
            .into_iter()
            .collect(),
        };
        f.validate(&d_o, &d_i).unwrap();
        let hom = hom_set(&d_o, "a", "b", None).unwrap();
        let ind = induced_map(&f, &d_o, &d_i, &hom).unwrap();
        assert_eq!(ind.target.class_count(), 1);
        let images: BTreeSet<usize> = ind.class_map.values().copied().collect();
        assert_eq!(images.len(), 1, "both classes collapse");
    }

    #[test]
    fn identity_induces_identity() {
        let c = models::square_removed_grid();
        let f = CombMap::identity(&c);
        let hom = hom_set(&c, "v0_0", "v3_3", None).unwrap();
        assert_eq!(hom.class_count(), 2);
        let ind = induced_map(&f, &c, &c, &hom).unwrap();
        for (src, dst) in &ind.class_map {
            assert_eq!(src, dst);
        }
    }

    #[test]
    fn obstruction_for_incomparable_context_against_interval() {
        // dII rel two incomparable points vs dI rel anything.
        let dii = standard_space(StandardSpace::DIIGrid(4));
        let ctx = discrete_context(&["a", "b"]);
        let b = mark_context(dii, ctx.clone(), marking(&[("a", "v0_1"), ("b", "v3_0")])).unwrap();
        let di = standard_space(StandardSpace::DIGrid(4));
        let c = mark_context(di, ctx, marking(&[("a", "v1"), ("b", "v3")])).unwrap();
        match equivalence_obstruction(&b, &c, None).unwrap() {
            ObstructionVerdict::ObstructionFound(w) => {
                assert_eq!(w.hom_b_classes, 0);
                assert!(w.hom_c_classes > 0);
            }
            other => panic!("expected obstruction, got {:?}", other),
        }
    }

    #[test]
    fn no_obstruction_for_corner_context() {
        let dii = standard_space(StandardSpace::DII);
        let ctx = discrete_context(&["a", "b"]);
        let b = mark_context(dii, ctx.clone(), marking(&[("a", "v0_0"), ("b", "v2_2")])).unwrap();
        let di = standard_space(StandardSpace::DIGrid(2));
        let c = mark_context(di, ctx, marking(&[("a", "v0"), ("b", "v2")])).unwrap();
        assert!(equivalence_obstruction(&b, &c, None).unwrap().passed());
        // With the max-map supplied the bijection check also passes.
        let f = models::max_comb_map(2);
        assert!(equivalence_obstruction(&b, &c, Some(&f)).unwrap().passed());
    }
}
