//! Piecewise-linear dimaps and their verification.
//!
//! A map is checked by resolving it to piecewise-affine form over a cell
//! decomposition of its domain and then verifying, exactly:
//!
//! * monotonicity: for every ordered pair of pieces, the maximum of
//!   `f_i(p) - f_i(q)` over `p <= q` is nonpositive (a small exact LP);
//!   this covers order pairs with no monotone path between them, which
//!   non-convex regions have;
//! * containment: piece images are clipped against the codomain's
//!   arrangement and every fragment's relative interior must be retained.
//!
//! Branched one-complexes (intervals glued at points, with the amalgam
//! order) get a one-dimensional version of the same machinery.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cellgeo::Cell;
use crate::expr::{AffineForm, EvalError, Expr, LinConstraint};
use crate::geom::{Point, RectRegion, RegionClass};
use crate::lp::{maximize, LpResult};
use crate::pwa::{interior_samples, normalize, Piece, PlStage, Pwa, PwaError};
use crate::rat::Rat;

/// A directed segment in Q^n with `from <= to` componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seg {
    pub from: Point,
    pub to: Point,
}

/// A finite union of monotone segments with the ambient componentwise order.
#[derive(Debug, Clone)]
pub struct SegSet {
    pub dim: usize,
    pub segs: Vec<Seg>,
}

impl SegSet {
    pub fn new(dim: usize, segs: Vec<Seg>) -> Result<SegSet, PlError> {
        for s in &segs {
            if s.from.dim() != dim || s.to.dim() != dim {
                return Err(PlError::BadGeometry("segment dimension mismatch".into()));
            }
            if !crate::geom::point_le(&s.from, &s.to) || s.from == s.to {
                return Err(PlError::BadGeometry(format!(
                    "segment {} -> {} is not strictly monotone",
                    s.from, s.to
                )));
            }
        }
        Ok(SegSet { dim, segs })
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.segs.iter().any(|s| point_on_segment(p, s))
    }
}

fn point_on_segment(p: &Point, s: &Seg) -> bool {
    let dim = p.dim();
    if dim != s.from.dim() {
        return false;
    }
    // p = from + t (to - from) for some t in [0,1].
    let mut t: Option<Rat> = None;
    for i in 0..dim {
        let d = &s.to.0[i] - &s.from.0[i];
        let off = &p.0[i] - &s.from.0[i];
        if d.is_zero() {
            if !off.is_zero() {
                return false;
            }
        } else {
            let ti = &off / &d;
            match &t {
                None => t = Some(ti),
                Some(t0) => {
                    if *t0 != ti {
                        return false;
                    }
                }
            }
        }
    }
    match t {
        None => true, // degenerate segment equals p
        Some(t) => !t.is_negative() && t <= Rat::one(),
    }
}

/// A point on an arc of a branched space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArcPoint {
    pub arc: String,
    pub at: Rat,
}

/// Finitely many directed intervals with endpoint/interior identifications;
/// the order is the amalgam order generated by the arc orders through the
/// identified points.
#[derive(Debug, Clone)]
pub struct BranchedSpace {
    pub arcs: BTreeMap<String, (Rat, Rat)>,
    pub idents: Vec<(ArcPoint, ArcPoint)>,
}

impl BranchedSpace {
    pub fn contains(&self, p: &ArcPoint) -> bool {
        match self.arcs.get(&p.arc) {
            None => false,
            Some((lo, hi)) => *lo <= p.at && p.at <= *hi,
        }
    }

    /// Are two arc points the same point of the quotient?
    pub fn same_point(&self, p: &ArcPoint, q: &ArcPoint) -> bool {
        if p == q {
            return true;
        }
        // Closure of the identification relation over the finite ident set.
        let mut pts: Vec<ArcPoint> = Vec::new();
        let id_of = |pt: &ArcPoint, pts: &mut Vec<ArcPoint>| -> usize {
            if let Some(i) = pts.iter().position(|x| x == pt) {
                i
            } else {
                pts.push(pt.clone());
                pts.len() - 1
            }
        };
        let mut pairs = Vec::new();
        for (a, b) in &self.idents {
            let ia = id_of(a, &mut pts);
            let ib = id_of(b, &mut pts);
            pairs.push((ia, ib));
        }
        let (Some(ip), Some(iq)) = (
            pts.iter().position(|x| x == p),
            pts.iter().position(|x| x == q),
        ) else {
            return false;
        };
        let mut parent: Vec<usize> = (0..pts.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for (a, b) in pairs {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        find(&mut parent, ip) == find(&mut parent, iq)
    }
}

/// The geometric spaces maps run between.
#[derive(Debug, Clone)]
pub enum Geometry {
    Region(RectRegion),
    Segments(SegSet),
    Branched(BranchedSpace),
}

impl Geometry {
    pub fn ambient_dim(&self) -> Option<usize> {
        match self {
            Geometry::Region(r) => Some(r.dim()),
            Geometry::Segments(s) => Some(s.dim),
            Geometry::Branched(_) => None,
        }
    }
}

/// A marked point of a geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Ambient(Point),
    Arc(ArcPoint),
}

/// A geometry with named marked points (the context image).
#[derive(Debug, Clone)]
pub struct MarkedGeom {
    pub geometry: Geometry,
    pub marks: BTreeMap<String, Location>,
}

impl MarkedGeom {
    pub fn unmarked(geometry: Geometry) -> MarkedGeom {
        MarkedGeom {
            geometry,
            marks: BTreeMap::new(),
        }
    }

    pub fn mark_ok(&self, loc: &Location) -> bool {
        match (&self.geometry, loc) {
            (Geometry::Region(r), Location::Ambient(p)) => r.keeps(p),
            (Geometry::Segments(s), Location::Ambient(p)) => s.contains_point(p),
            (Geometry::Branched(b), Location::Arc(a)) => b.contains(a),
            _ => false,
        }
    }
}

/// One arc's worth of a branched map: the target arc and the coordinate
/// expression (one variable).
#[derive(Debug, Clone)]
pub struct ArcMap {
    pub target: String,
    pub expr: Expr,
}

#[derive(Debug, Clone)]
pub struct BranchStage {
    pub arcs: BTreeMap<String, ArcMap>,
}

/// A piecewise-linear dimap candidate, as a pipeline of stages (an empty
/// pipeline is the identity).
#[derive(Debug, Clone)]
pub enum DiMap {
    Ambient {
        dim_in: usize,
        dim_out: usize,
        stages: Vec<PlStage>,
    },
    Branched {
        stages: Vec<BranchStage>,
    },
}

impl DiMap {
    pub fn identity(dim: usize) -> DiMap {
        DiMap::Ambient {
            dim_in: dim,
            dim_out: dim,
            stages: Vec::new(),
        }
    }

    pub fn branched_identity() -> DiMap {
        DiMap::Branched { stages: Vec::new() }
    }

    pub fn single(dim_in: usize, coords: Vec<Expr>) -> DiMap {
        DiMap::Ambient {
            dim_in,
            dim_out: coords.len(),
            stages: vec![PlStage { dim_in, coords }],
        }
    }

    /// `g.after(f)` = g of f.
    pub fn after(&self, f: &DiMap) -> DiMap {
        match (self, f) {
            (
                DiMap::Ambient {
                    dim_out, stages, ..
                },
                DiMap::Ambient {
                    dim_in,
                    stages: fs,
                    ..
                },
            ) => {
                let mut all = fs.clone();
                all.extend(stages.iter().cloned());
                DiMap::Ambient {
                    dim_in: *dim_in,
                    dim_out: *dim_out,
                    stages: all,
                }
            }
            (DiMap::Branched { stages }, DiMap::Branched { stages: fs }) => {
                let mut all = fs.clone();
                all.extend(stages.iter().cloned());
                DiMap::Branched { stages: all }
            }
            _ => panic!("cannot compose ambient and branched maps"),
        }
    }

    pub fn eval_ambient(&self, p: &Point) -> Result<Point, EvalError> {
        match self {
            DiMap::Ambient { stages, .. } => {
                let mut cur = p.clone();
                for stage in stages {
                    let mut next = Vec::with_capacity(stage.coords.len());
                    for e in &stage.coords {
                        next.push(e.eval(&cur)?);
                    }
                    cur = Point::new(next);
                }
                Ok(cur)
            }
            DiMap::Branched { .. } => Err(EvalError::Malformed),
        }
    }

    pub fn eval_branched(&self, p: &ArcPoint) -> Result<ArcPoint, EvalError> {
        match self {
            DiMap::Branched { stages } => {
                let mut cur = p.clone();
                for stage in stages {
                    let am = stage.arcs.get(&cur.arc).ok_or(EvalError::Malformed)?;
                    let v = am.expr.eval(&Point::new(vec![cur.at]))?;
                    cur = ArcPoint {
                        arc: am.target.clone(),
                        at: v,
                    };
                }
                Ok(cur)
            }
            DiMap::Ambient { .. } => Err(EvalError::Malformed),
        }
    }

    pub fn eval_location(&self, loc: &Location) -> Result<Location, EvalError> {
        match loc {
            Location::Ambient(p) => Ok(Location::Ambient(self.eval_ambient(p)?)),
            Location::Arc(a) => Ok(Location::Arc(self.eval_branched(a)?)),
        }
    }

    /// Exact evaluation, with a domain membership check first.
    pub fn eval_in(&self, domain: &Geometry, loc: &Location) -> Result<Location, EvalError> {
        let ok = match (domain, loc) {
            (Geometry::Region(r), Location::Ambient(p)) => r.keeps(p),
            (Geometry::Segments(s), Location::Ambient(p)) => s.contains_point(p),
            (Geometry::Branched(b), Location::Arc(a)) => b.contains(a),
            _ => false,
        };
        if !ok {
            return Err(EvalError::OutsideDomain);
        }
        self.eval_location(loc)
    }
}

#[derive(Debug, Clone)]
pub enum PlError {
    Pwa(PwaError),
    Eval(EvalError),
    BadGeometry(String),
    Unsupported(String),
    UnknownMark(String),
}

impl fmt::Display for PlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlError::Pwa(e) => write!(f, "{}", e),
            PlError::Eval(e) => write!(f, "{}", e),
            PlError::BadGeometry(s) => write!(f, "bad geometry: {}", s),
            PlError::Unsupported(s) => write!(f, "unsupported: {}", s),
            PlError::UnknownMark(s) => write!(f, "unknown mark {}", s),
        }
    }
}

impl From<PwaError> for PlError {
    fn from(e: PwaError) -> PlError {
        PlError::Pwa(e)
    }
}

impl From<EvalError> for PlError {
    fn from(e: EvalError) -> PlError {
        PlError::Eval(e)
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub stage: String,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Pass,
    Fail(Failure),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn fail(stage: &str, reason: String) -> Verdict {
        Verdict::Fail(Failure {
            stage: stage.to_string(),
            reason,
        })
    }
}

/// Cells (of every dimension) covering the retained set of a region.
///
/// Full-dimensional arrangement cells come first; lower-dimensional faces
/// are added only when no adjacent retained higher cell covers them (hanging
/// walls like the box-to-the-boundary examples need them).
pub fn region_cells(region: &RectRegion) -> Result<Vec<Cell>, PlError> {
    let dim = region.dim();
    let keeps = |p: &Point| region.keeps(p);
    let half = |a: &Rat, b: &Rat| (a + b) / Rat::int(2);
    match dim {
        1 => {
            let xs = region.face_coords(0);
            let mut cells = Vec::new();
            let mut covered = vec![false; xs.len()];
            for i in 0..xs.len().saturating_sub(1) {
                let mid = Point::new(vec![half(&xs[i], &xs[i + 1])]);
                if keeps(&mid) {
                    cells.push(Cell::segment(
                        Point::new(vec![xs[i].clone()]),
                        Point::new(vec![xs[i + 1].clone()]),
                    ));
                    covered[i] = true;
                    covered[i + 1] = true;
                }
            }
            for (i, x) in xs.iter().enumerate() {
                let p = Point::new(vec![x.clone()]);
                if keeps(&p) && !covered[i] {
                    cells.push(Cell::point(p));
                }
            }
            if cells.is_empty() {
                return Err(PlError::BadGeometry("region retains nothing".into()));
            }
            Ok(cells)
        }
        2 => {
            let xs = region.face_coords(0);
            let ys = region.face_coords(1);
            let nx = xs.len();
            let ny = ys.len();
            let mut cells: Vec<Cell> = Vec::new();
            let mut cell_kept = vec![vec![false; ny.saturating_sub(1)]; nx.saturating_sub(1)];
            for i in 0..nx.saturating_sub(1) {
                for j in 0..ny.saturating_sub(1) {
                    let c = Point::new(vec![half(&xs[i], &xs[i + 1]), half(&ys[j], &ys[j + 1])]);
                    if keeps(&c) {
                        cell_kept[i][j] = true;
                        cells.push(Cell::from_box(
                            &Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            &Point::new(vec![xs[i + 1].clone(), ys[j + 1].clone()]),
                        ));
                    }
                }
            }
            // Horizontal faces.
            let mut face_used = |p: &Point, q: &Point| {
                cells.push(Cell::segment(p.clone(), q.clone()));
            };
            for i in 0..nx.saturating_sub(1) {
                for j in 0..ny {
                    let mid = Point::new(vec![half(&xs[i], &xs[i + 1]), ys[j].clone()]);
                    if !keeps(&mid) {
                        continue;
                    }
                    let below = j > 0 && cell_kept[i][j - 1];
                    let above = j < ny - 1 && cell_kept[i][j];
                    if !below && !above {
                        face_used(
                            &Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            &Point::new(vec![xs[i + 1].clone(), ys[j].clone()]),
                        );
                    }
                }
            }
            for j in 0..ny.saturating_sub(1) {
                for i in 0..nx {
                    let mid = Point::new(vec![xs[i].clone(), half(&ys[j], &ys[j + 1])]);
                    if !keeps(&mid) {
                        continue;
                    }
                    let left = i > 0 && cell_kept[i - 1][j];
                    let right = i < nx - 1 && cell_kept[i][j];
                    if !left && !right {
                        face_used(
                            &Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            &Point::new(vec![xs[i].clone(), ys[j + 1].clone()]),
                        );
                    }
                }
            }
            // Isolated grid points.
            for i in 0..nx {
                for j in 0..ny {
                    let p = Point::new(vec![xs[i].clone(), ys[j].clone()]);
                    if keeps(&p) && !cells.iter().any(|c| c.contains(&p)) {
                        cells.push(Cell::point(p));
                    }
                }
            }
            if cells.is_empty() {
                return Err(PlError::BadGeometry("region retains nothing".into()));
            }
            Ok(cells)
        }
        d => Err(PlError::Unsupported(format!(
            "region cells in dimension {}",
            d
        ))),
    }
}

/// Domain cells for any ambient geometry.
pub fn domain_cells(g: &Geometry) -> Result<Vec<Cell>, PlError> {
    match g {
        Geometry::Region(r) => region_cells(r),
        Geometry::Segments(s) => Ok(s
            .segs
            .iter()
            .map(|seg| Cell::segment(seg.from.clone(), seg.to.clone()))
            .collect()),
        Geometry::Branched(_) => Err(PlError::Unsupported(
            "ambient cells of a branched space".into(),
        )),
    }
}

/// Removed material of a region as arrangement cells of every dimension,
/// including internal walls between forbidden boxes.
pub fn removed_cells(region: &RectRegion) -> Vec<Cell> {
    let dim = region.dim();
    let half = |a: &Rat, b: &Rat| (a + b) / Rat::int(2);
    let removed = |p: &Point| matches!(region.classify(p), Ok(RegionClass::Removed));
    let mut out = Vec::new();
    match dim {
        1 => {
            let xs = region.face_coords(0);
            for i in 0..xs.len().saturating_sub(1) {
                let mid = Point::new(vec![half(&xs[i], &xs[i + 1])]);
                if removed(&mid) {
                    out.push(Cell::segment(
                        Point::new(vec![xs[i].clone()]),
                        Point::new(vec![xs[i + 1].clone()]),
                    ));
                }
            }
            for x in &xs {
                let p = Point::new(vec![x.clone()]);
                if removed(&p) {
                    out.push(Cell::point(p));
                }
            }
        }
        2 => {
            let xs = region.face_coords(0);
            let ys = region.face_coords(1);
            for i in 0..xs.len().saturating_sub(1) {
                for j in 0..ys.len().saturating_sub(1) {
                    let c = Point::new(vec![half(&xs[i], &xs[i + 1]), half(&ys[j], &ys[j + 1])]);
                    if removed(&c) {
                        out.push(Cell::from_box(
                            &Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            &Point::new(vec![xs[i + 1].clone(), ys[j + 1].clone()]),
                        ));
                    }
                }
            }
            for i in 0..xs.len().saturating_sub(1) {
                for j in 0..ys.len() {
                    let mid = Point::new(vec![half(&xs[i], &xs[i + 1]), ys[j].clone()]);
                    if removed(&mid) {
                        out.push(Cell::segment(
                            Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            Point::new(vec![xs[i + 1].clone(), ys[j].clone()]),
                        ));
                    }
                }
            }
            for j in 0..ys.len().saturating_sub(1) {
                for i in 0..xs.len() {
                    let mid = Point::new(vec![xs[i].clone(), half(&ys[j], &ys[j + 1])]);
                    if removed(&mid) {
                        out.push(Cell::segment(
                            Point::new(vec![xs[i].clone(), ys[j].clone()]),
                            Point::new(vec![xs[i].clone(), ys[j + 1].clone()]),
                        ));
                    }
                }
            }
            for i in 0..xs.len() {
                for j in 0..ys.len() {
                    let p = Point::new(vec![xs[i].clone(), ys[j].clone()]);
                    if removed(&p) {
                        out.push(Cell::point(p));
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Resolves an ambient map over a geometry's cells.
pub fn refine(map: &DiMap, domain: &Geometry) -> Result<Pwa, PlError> {
    let DiMap::Ambient {
        dim_in, stages, ..
    } = map
    else {
        return Err(PlError::Unsupported("refine on a branched map".into()));
    };
    let cells = domain_cells(domain)?;
    if let Some(d) = domain.ambient_dim() {
        if d != *dim_in {
            return Err(PlError::Pwa(PwaError::DimensionMismatch {
                expected: *dim_in,
                got: d,
            }));
        }
    }
    Ok(normalize(&cells, stages, *dim_in)?)
}

fn bbox_le(lo: &Point, hi: &Point) -> bool {
    lo.0.iter().zip(hi.0.iter()).all(|(a, b)| a <= b)
}

fn bbox_overlap(a: &Cell, b: &Cell) -> bool {
    let (alo, ahi) = a.bbox();
    let (blo, bhi) = b.bbox();
    bbox_le(&alo, &bhi) && bbox_le(&blo, &ahi)
}

/// Lifts an affine form on p (or q) into the joint (p, q) variable space.
fn lift(form: &AffineForm, n: usize, q_side: bool) -> AffineForm {
    let mut coef: Vec<Rat> = (0..2 * n).map(|_| Rat::zero()).collect();
    for (i, c) in form.coef.iter().enumerate() {
        coef[if q_side { n + i } else { i }] = c.clone();
    }
    AffineForm::new(coef, form.konst.clone())
}

/// Maximum of `a(p) - b(q)` over `p in cp, q in cq, p <= q`, with a witness.
fn max_ordered_gap(
    cp: &Cell,
    cq: &Cell,
    a: &AffineForm,
    b: &AffineForm,
) -> Option<(Rat, Point, Point)> {
    let n = cp.ambient;
    let mut cons: Vec<LinConstraint> = Vec::new();
    for c in &cp.constraints {
        cons.push(LinConstraint {
            form: lift(&c.form, n, false),
            rel: c.rel,
        });
    }
    for c in &cq.constraints {
        cons.push(LinConstraint {
            form: lift(&c.form, n, true),
            rel: c.rel,
        });
    }
    for i in 0..n {
        // q_i - p_i >= 0
        let mut coef: Vec<Rat> = (0..2 * n).map(|_| Rat::zero()).collect();
        coef[i] = -Rat::one();
        coef[n + i] = Rat::one();
        cons.push(LinConstraint::ge(AffineForm::new(coef, Rat::zero())));
    }
    let obj = {
        let la = lift(a, n, false);
        let lb = lift(b, n, true);
        la.sub(&lb)
    };
    let (plo, _) = cp.bbox();
    let (qlo, _) = cq.bbox();
    let mut lower = plo.0.clone();
    lower.extend(qlo.0.clone());
    match maximize(2 * n, &lower, &cons, &obj) {
        LpResult::Infeasible => None,
        LpResult::Unbounded => unreachable!("cells are bounded"),
        LpResult::Optimal { value, point } => {
            let p = Point::new(point[..n].to_vec());
            let q = Point::new(point[n..].to_vec());
            Some((value, p, q))
        }
    }
}

/// Order-preservation over all piece pairs (including each piece with
/// itself). Sound and complete for the ambient componentwise order on the
/// retained set.
fn check_monotone(pwa: &Pwa) -> Option<Failure> {
    let pieces = &pwa.pieces;
    for p1 in pieces.iter() {
        for p2 in pieces.iter() {
            let (lo1, _) = p1.cell.bbox();
            let (_, hi2) = p2.cell.bbox();
            if !bbox_le(&lo1, &hi2) {
                continue; // no ordered pair at all
            }
            if p1.map == p2.map && p1.map.nonneg_coeffs() {
                continue;
            }
            for coord in 0..pwa.dim_out {
                let a = &p1.map.rows[coord];
                let b = &p2.map.rows[coord];
                // Interval separation: sup a over p1 <= inf b over p2.
                let max_a = p1.cell.verts.iter().map(|v| a.eval(v)).max().unwrap();
                let min_b = p2.cell.verts.iter().map(|v| b.eval(v)).min().unwrap();
                if max_a <= min_b {
                    continue;
                }
                if let Some((gap, p, q)) = max_ordered_gap(&p1.cell, &p2.cell, a, b) {
                    if gap.is_positive() {
                        return Some(Failure {
                            stage: "monotonicity".into(),
                            reason: format!(
                                "order violated: {} <= {} but image coordinate {} decreases from {} to {}",
                                p,
                                q,
                                coord,
                                a.eval(&p),
                                b.eval(&q)
                            ),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Clips an image cell by the codomain arrangement and classifies fragments.
fn check_image_in_region(
    image: &Cell,
    region: &RectRegion,
    label: &str,
) -> Option<Failure> {
    for v in &image.verts {
        if !region.outer().contains(v) {
            return Some(Failure {
                stage: "containment".into(),
                reason: format!("{}: image point {} escapes the outer box", label, v),
            });
        }
    }
    let mut frags = vec![image.clone()];
    for axis in 0..region.dim() {
        for coord in region.face_coords(axis) {
            let plane = {
                let mut f = AffineForm::var(region.dim(), axis);
                f.konst = -coord.clone();
                f
            };
            let mut next = Vec::new();
            for frag in &frags {
                if frag.is_cut_by(&plane) {
                    let (ge, le) = frag.split(&plane);
                    next.extend(ge);
                    next.extend(le);
                } else {
                    next.push(frag.clone());
                }
            }
            frags = next;
        }
    }
    for frag in &frags {
        let p = frag.interior_point();
        match region.classify(&p) {
            Ok(RegionClass::Inside) | Ok(RegionClass::OnForbiddenBoundary) => {}
            _ => {
                return Some(Failure {
                    stage: "containment".into(),
                    reason: format!("{}: image reaches removed material at {}", label, p),
                });
            }
        }
    }
    None
}

/// Image containment of one piece into a segment union.
fn check_image_in_segments(
    image_pts: &[Point],
    segs: &SegSet,
    label: &str,
) -> Option<Failure> {
    let mut pts = image_pts.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        if segs.contains_point(&pts[0]) {
            return None;
        }
        return Some(Failure {
            stage: "containment".into(),
            reason: format!("{}: image point {} is not on the one-complex", label, pts[0]),
        });
    }
    // All points must be collinear; then the spanned segment must be covered.
    let u = pts[0].clone();
    let dir: Vec<Rat> = pts
        .iter()
        .find_map(|p| {
            let d: Vec<Rat> = p.0.iter().zip(u.0.iter()).map(|(a, b)| a - b).collect();
            if d.iter().all(|c| c.is_zero()) {
                None
            } else {
                Some(d)
            }
        })
        .expect("distinct points exist");
    let colinear = |p: &Point| -> bool {
        if segs.dim == 1 {
            return true;
        }
        let dx = &p.0[0] - &u.0[0];
        let dy = &p.0[1] - &u.0[1];
        (&dir[0] * &dy - &dir[1] * &dx).is_zero()
    };
    if !pts.iter().all(|p| colinear(p)) {
        return Some(Failure {
            stage: "containment".into(),
            reason: format!("{}: image is not one-dimensional", label),
        });
    }
    let param = |p: &Point| -> Rat {
        p.0.iter()
            .zip(u.0.iter())
            .zip(dir.iter())
            .map(|((a, b), d)| (a - b) * d)
            .sum()
    };
    let mut lo = param(&pts[0]);
    let mut hi = lo.clone();
    for p in &pts[1..] {
        let t = param(p);
        if t < lo {
            lo = t.clone();
        }
        if t > hi {
            hi = t;
        }
    }
    covered_on_line(&u, &dir, &lo, &hi, segs, label)
}

/// Is the parameter interval [lo, hi] on the line u + t*dir covered by the
/// collinear members of the segment set? Also serves the homotopy sweep
/// check, which reduces to the same coverage question.
pub(crate) fn interp_coverage_check(
    u: &Point,
    dir: &[Rat],
    lo: &Rat,
    hi: &Rat,
    segs: &SegSet,
) -> Option<Failure> {
    covered_on_line(u, dir, lo, hi, segs, "homotopy sweep")
}

fn covered_on_line(
    u: &Point,
    dir: &[Rat],
    lo: &Rat,
    hi: &Rat,
    segs: &SegSet,
    label: &str,
) -> Option<Failure> {
    let on_line = |p: &Point| -> bool {
        if segs.dim == 1 {
            return true;
        }
        let dx = &p.0[0] - &u.0[0];
        let dy = &p.0[1] - &u.0[1];
        (&dir[0] * &dy - &dir[1] * &dx).is_zero()
    };
    let param = |p: &Point| -> Rat {
        p.0.iter()
            .zip(u.0.iter())
            .zip(dir.iter())
            .map(|((a, b), d)| (a - b) * d)
            .sum()
    };
    let mut intervals: Vec<(Rat, Rat)> = Vec::new();
    for s in &segs.segs {
        if on_line(&s.from) && on_line(&s.to) {
            let a = param(&s.from);
            let b = param(&s.to);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            intervals.push((a, b));
        }
    }
    intervals.sort();
    let mut merged: Vec<(Rat, Rat)> = Vec::new();
    for (a, b) in intervals {
        match merged.last_mut() {
            Some((_, e)) if *e >= a => {
                if b > *e {
                    *e = b;
                }
            }
            _ => merged.push((a, b)),
        }
    }
    let ok = merged.iter().any(|(a, b)| a <= lo && hi <= b);
    if ok {
        None
    } else {
        Some(Failure {
            stage: "containment".into(),
            reason: format!(
                "{}: image segment is not covered by the one-complex",
                label
            ),
        })
    }
}

fn piece_image_points(piece: &Piece) -> Vec<Point> {
    piece.cell.verts.iter().map(|v| piece.map.eval(v)).collect()
}

/// Verifies that an ambient map is a dimap from `domain` into `codomain`.
pub fn check_dimap(
    map: &DiMap,
    domain: &Geometry,
    codomain: &Geometry,
) -> Result<Verdict, PlError> {
    match map {
        DiMap::Ambient { .. } => {
            let pwa = refine(map, domain)?;
            if let Some(f) = check_monotone(&pwa) {
                return Ok(Verdict::Fail(f));
            }
            for piece in &pwa.pieces {
                let label = crate::pwa::piece_label(piece);
                let img = piece_image_points(piece);
                match codomain {
                    Geometry::Region(r) => {
                        let cell = Cell::from_points(r.dim(), &img).ok_or_else(|| {
                            PlError::BadGeometry("piece image has no points".into())
                        })?;
                        if let Some(f) = check_image_in_region(&cell, r, &label) {
                            return Ok(Verdict::Fail(f));
                        }
                    }
                    Geometry::Segments(s) => {
                        if let Some(f) = check_image_in_segments(&img, s, &label) {
                            return Ok(Verdict::Fail(f));
                        }
                    }
                    Geometry::Branched(_) => {
                        return Err(PlError::Unsupported(
                            "ambient map into a branched space".into(),
                        ))
                    }
                }
            }
            Ok(Verdict::Pass)
        }
        DiMap::Branched { .. } => {
            let (Geometry::Branched(b), Geometry::Branched(c)) = (domain, codomain) else {
                return Err(PlError::Unsupported(
                    "branched maps need branched domain and codomain".into(),
                ));
            };
            check_branched_dimap(map, b, c)
        }
    }
}

/// Resolves the 1-d composite over one arc of a branched map.
pub fn branched_arc_pwa(
    map: &DiMap,
    space: &BranchedSpace,
    arc: &str,
) -> Result<(String, Pwa), PlError> {
    let DiMap::Branched { stages } = map else {
        return Err(PlError::Unsupported("ambient map on a branched space".into()));
    };
    let (lo, hi) = space
        .arcs
        .get(arc)
        .ok_or_else(|| PlError::BadGeometry(format!("unknown arc {}", arc)))?;
    let mut cur = arc.to_string();
    let mut pl_stages: Vec<PlStage> = Vec::new();
    for stage in stages {
        let am = stage
            .arcs
            .get(&cur)
            .ok_or_else(|| PlError::BadGeometry(format!("no arc map for {}", cur)))?;
        pl_stages.push(PlStage {
            dim_in: 1,
            coords: vec![am.expr.clone()],
        });
        cur = am.target.clone();
    }
    let cell = if lo == hi {
        Cell::point(Point::new(vec![lo.clone()]))
    } else {
        Cell::segment(Point::new(vec![lo.clone()]), Point::new(vec![hi.clone()]))
    };
    let pwa = normalize(&[cell], &pl_stages, 1)?;
    Ok((cur, pwa))
}

fn check_branched_dimap(
    map: &DiMap,
    domain: &BranchedSpace,
    codomain: &BranchedSpace,
) -> Result<Verdict, PlError> {
    for arc in domain.arcs.keys() {
        let (target, pwa) = branched_arc_pwa(map, domain, arc)?;
        let Some((tlo, thi)) = codomain.arcs.get(&target).cloned() else {
            return Err(PlError::BadGeometry(format!(
                "target arc {} missing in codomain",
                target
            )));
        };
        // Monotone + agreeing at shared points (1-d ordered-pair check).
        for p1 in &pwa.pieces {
            for p2 in &pwa.pieces {
                let (lo1, _) = p1.cell.bbox();
                let (_, hi2) = p2.cell.bbox();
                if lo1.0[0] > hi2.0[0] {
                    continue;
                }
                let a = &p1.map.rows[0];
                let b = &p2.map.rows[0];
                if let Some((gap, p, q)) = max_ordered_gap(&p1.cell, &p2.cell, a, b) {
                    if gap.is_positive() {
                        return Ok(Verdict::fail(
                            "monotonicity",
                            format!(
                                "arc {}: order violated between {} and {}",
                                arc, p.0[0], q.0[0]
                            ),
                        ));
                    }
                }
            }
            // Containment in the target arc interval.
            for v in &p1.cell.verts {
                let val = p1.map.rows[0].eval(v);
                if val < tlo || val > thi {
                    return Ok(Verdict::fail(
                        "containment",
                        format!(
                            "arc {} maps {} to {} outside target arc {}",
                            arc, v.0[0], val, target
                        ),
                    ));
                }
            }
        }
    }
    // Identified points must stay identified.
    for (p, q) in &domain.idents {
        let ip = map.eval_branched(p)?;
        let iq = map.eval_branched(q)?;
        if !codomain.same_point(&ip, &iq) {
            return Ok(Verdict::fail(
                "identification",
                format!(
                    "identified points {:?} and {:?} map to distinct points",
                    p, q
                ),
            ));
        }
    }
    Ok(Verdict::Pass)
}

/// Exact function equality of two maps over a geometry (first-match
/// semantics, decided on interior samples of a common refinement).
pub fn maps_equal(
    m1: &DiMap,
    m2: &DiMap,
    domain: &Geometry,
) -> Result<Option<(Location, Location, Location)>, PlError> {
    match domain {
        Geometry::Branched(b) => {
            let (DiMap::Branched { .. }, DiMap::Branched { .. }) = (m1, m2) else {
                return Err(PlError::Unsupported("mixed map kinds".into()));
            };
            for arc in b.arcs.keys() {
                let (t1, pwa1) = branched_arc_pwa(m1, b, arc)?;
                let (t2, pwa2) = branched_arc_pwa(m2, b, arc)?;
                let mut samples: Vec<Rat> = Vec::new();
                for pwa in [&pwa1, &pwa2] {
                    for p in &pwa.pieces {
                        for v in &p.cell.verts {
                            samples.push(v.0[0].clone());
                        }
                        samples.push(p.cell.interior_point().0[0].clone());
                    }
                }
                samples.sort();
                samples.dedup();
                for s in samples {
                    let ap = ArcPoint {
                        arc: arc.clone(),
                        at: s,
                    };
                    let v1 = m1.eval_branched(&ap)?;
                    let v2 = m2.eval_branched(&ap)?;
                    if !b_same(&t1, &t2, b, &v1, &v2) {
                        return Ok(Some((
                            Location::Arc(ap),
                            Location::Arc(v1),
                            Location::Arc(v2),
                        )));
                    }
                }
            }
            Ok(None)
        }
        _ => {
            let pwa1 = refine(m1, domain)?;
            let pwa2 = refine(m2, domain)?;
            for p1 in &pwa1.pieces {
                for p2 in &pwa2.pieces {
                    if !bbox_overlap(&p1.cell, &p2.cell) {
                        continue;
                    }
                    let Some(common) = p1.cell.intersect(&p2.cell) else {
                        continue;
                    };
                    for s in interior_samples(&common) {
                        let v1 = m1.eval_ambient(&s)?;
                        let v2 = m2.eval_ambient(&s)?;
                        if v1 != v2 {
                            return Ok(Some((
                                Location::Ambient(s),
                                Location::Ambient(v1),
                                Location::Ambient(v2),
                            )));
                        }
                    }
                }
            }
            Ok(None)
        }
    }
}

fn b_same(_t1: &str, _t2: &str, b: &BranchedSpace, v1: &ArcPoint, v2: &ArcPoint) -> bool {
    b.same_point(v1, v2)
}

/// Verifies `f(marks_b(name)) = marks_c(name)` exactly for every context name.
pub fn check_context_preserving(
    map: &DiMap,
    source: &MarkedGeom,
    target: &MarkedGeom,
    context: &[String],
) -> Result<Verdict, PlError> {
    for name in context {
        let from = source
            .marks
            .get(name)
            .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
        let want = target
            .marks
            .get(name)
            .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
        let got = map.eval_location(from)?;
        let same = match (&got, want) {
            (Location::Ambient(a), Location::Ambient(b)) => a == b,
            (Location::Arc(a), Location::Arc(b)) => match &target.geometry {
                Geometry::Branched(space) => space.same_point(a, b),
                _ => a == b,
            },
            _ => false,
        };
        if !same {
            return Ok(Verdict::fail(
                "context",
                format!(
                    "marked point {} moves: {:?} maps to {:?}, expected {:?}",
                    name, from, got, want
                ),
            ));
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ri};

    fn pt2(x: Rat, y: Rat) -> Point {
        Point::new(vec![x, y])
    }

    fn unit_region(dim: usize) -> Geometry {
        Geometry::Region(RectRegion::unit_cube(dim))
    }

    #[test]
    fn max_map_is_a_dimap() {
        let f = DiMap::single(2, vec![Expr::max2(Expr::var(2, 0), Expr::var(2, 1))]);
        let verdict = check_dimap(&f, &unit_region(2), &unit_region(1)).unwrap();
        assert!(verdict.passed());
    }

    #[test]
    fn reversal_fails_with_witness() {
        // x -> 1 - x on the interval.
        let f = DiMap::single(1, vec![Expr::Aff(AffineForm::new(vec![ri(-1)], ri(1)))]);
        match check_dimap(&f, &unit_region(1), &unit_region(1)).unwrap() {
            Verdict::Fail(fail) => assert_eq!(fail.stage, "monotonicity"),
            Verdict::Pass => panic!("order-reversing map accepted"),
        }
    }

    #[test]
    fn containment_respects_forbidden_interior() {
        // Identity from the unit square into the square-removed region must
        // fail: the image covers the hole.
        let f = DiMap::identity(2);
        let target = Geometry::Region(crate::models::square_removed_region());
        match check_dimap(&f, &unit_region(2), &target).unwrap() {
            Verdict::Fail(fail) => assert_eq!(fail.stage, "containment"),
            Verdict::Pass => panic!("image through the hole accepted"),
        }
    }

    #[test]
    fn identity_on_punctured_region_passes() {
        let g = Geometry::Region(crate::models::square_removed_region());
        let f = DiMap::identity(2);
        assert!(check_dimap(&f, &g, &g).unwrap().passed());
    }

    #[test]
    fn monotone_on_convex_but_not_on_holed_region() {
        // f(x, y) = (x, y) except the top strip shifts right; fine on the
        // full square but violates order across the hole of the square-
        // removed region? Construct a genuinely non-monotone-on-holes map:
        // on y >= 2/3, f swaps to (max(x,y), y); below it is the identity.
        // Take p = (1/6, 1/2) <= q = (1/6, 2/3):
        // f(p) = (1/6, 1/2), f(q) = (2/3, 2/3): fine. Use instead a map
        // that pushes x left above the hole: (x - ... ) is order reversing
        // on its own; simplest witness: f(x,y) = ((1-t)... keep simple:
        let shift = Expr::Cases(vec![
            (
                vec![LinConstraint::var_ge(2, 1, rat(2, 3))],
                Expr::konst(2, ri(0)),
            ),
            (Vec::new(), Expr::var(2, 0)),
        ]);
        let f = DiMap::single(2, vec![shift, Expr::var(2, 1)]);
        let g = Geometry::Region(crate::models::square_removed_region());
        match check_dimap(&f, &g, &g).unwrap() {
            Verdict::Fail(fail) => assert_eq!(fail.stage, "monotonicity"),
            Verdict::Pass => panic!("cross-hole order violation missed"),
        }
    }

    #[test]
    fn segments_codomain_requires_rank_collapse() {
        let segs = SegSet::new(
            2,
            vec![
                Seg {
                    from: pt2(ri(0), ri(0)),
                    to: pt2(ri(1), ri(0)),
                },
                Seg {
                    from: pt2(ri(1), ri(0)),
                    to: pt2(ri(1), ri(1)),
                },
            ],
        )
        .unwrap();
        let target = Geometry::Segments(segs);
        let id = DiMap::identity(2);
        match check_dimap(&id, &unit_region(2), &target).unwrap() {
            Verdict::Fail(fail) => assert_eq!(fail.stage, "containment"),
            Verdict::Pass => panic!("2-dimensional image accepted into segments"),
        }
        // Collapse onto the lower-right boundary path: (x, y) -> (1, y)
        // after (x, y) -> (x, 0)... single stage (1, y) works.
        let collapse = DiMap::single(
            2,
            vec![Expr::konst(2, ri(1)), Expr::var(2, 1)],
        );
        match check_dimap(&collapse, &unit_region(2), &target).unwrap() {
            Verdict::Pass => {}
            Verdict::Fail(f) => panic!("collapse rejected: {}", f.reason),
        }
    }

    #[test]
    fn maps_equal_detects_differences() {
        let id = DiMap::identity(1);
        let sq = DiMap::single(
            1,
            vec![Expr::max2(
                Expr::var(1, 0),
                Expr::Aff(AffineForm::new(vec![ri(0)], rat(1, 2))),
            )],
        );
        let dom = unit_region(1);
        assert!(maps_equal(&id, &id, &dom).unwrap().is_none());
        assert!(maps_equal(&id, &sq, &dom).unwrap().is_some());
    }

    #[test]
    fn branched_collapse_is_a_dimap() {
        // The midpoint-collapse on two intervals glued at 1/2.
        let space = BranchedSpace {
            arcs: [
                ("b1".to_string(), (ri(0), ri(1))),
                ("b2".to_string(), (ri(0), ri(1))),
            ]
            .into_iter()
            .collect(),
            idents: vec![(
                ArcPoint {
                    arc: "b1".into(),
                    at: rat(1, 2),
                },
                ArcPoint {
                    arc: "b2".into(),
                    at: rat(1, 2),
                },
            )],
        };
        let half = Expr::max2(
            Expr::var(1, 0),
            Expr::Aff(AffineForm::new(vec![ri(0)], rat(1, 2))),
        );
        let h = DiMap::Branched {
            stages: vec![BranchStage {
                arcs: [
                    (
                        "b1".to_string(),
                        ArcMap {
                            target: "b1".into(),
                            expr: half.clone(),
                        },
                    ),
                    (
                        "b2".to_string(),
                        ArcMap {
                            target: "b2".into(),
                            expr: half,
                        },
                    ),
                ]
                .into_iter()
                .collect(),
            }],
        };
        let g = Geometry::Branched(space);
        assert!(check_dimap(&h, &g, &g).unwrap().passed());
    }
}
