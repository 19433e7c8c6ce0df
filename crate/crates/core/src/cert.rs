//! Dihomotopies and equivalence certificates.
//!
//! Every explicit dihomotopy in scope is a linear interpolation
//! `H(b,t) = (1-t)f(b) + t g(b)`. For dimaps f and g with `f <= g`
//! pointwise, H is automatically monotone jointly in (b, t); what remains
//! is exactness of the endpoints, fixed context points, and that the swept
//! family of segments stays inside the codomain. The sweep check is exact:
//! per refinement piece the segment family either separates from a removed
//! box affinely, or a quadratic resultant certifies that the family exits
//! one axis range before entering the other; failing both, the piece is
//! split and a rational witness is searched.
//!
//! A certificate packages f, g and the two zigzag chains; verification
//! re-checks every premise rather than trusting any of them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cellgeo::{Cell, QuadForm};
use crate::expr::{AffineForm, LinConstraint};
use crate::geom::{Point, RectRegion};
use crate::lp::{maximize, LpResult};
use crate::plmap::{
    branched_arc_pwa, check_context_preserving, check_dimap, maps_equal, removed_cells, ArcPoint,
    BranchedSpace, DiMap, Failure, Geometry, Location, MarkedGeom, PlError, SegSet, Verdict,
};
use crate::pwa::{AffMap, PlStage};
use crate::rat::Rat;

/// A one-parameter family of maps deforming `from` (t=0) into `to` (t=1).
#[derive(Debug, Clone)]
pub enum Homotopy {
    /// The linear interpolation between two maps.
    Interp { from: DiMap, to: DiMap },
    /// An explicit piecewise-linear map on domain x [0,1]; supported for
    /// one-dimensional region bases (where the product is still planar).
    Explicit { map: DiMap },
}

/// Builds the linear interpolation between two maps.
pub fn linear_interpolation(from: DiMap, to: DiMap) -> Homotopy {
    Homotopy::Interp { from, to }
}

impl Homotopy {
    /// Exact evaluation of the deformation at (p, t).
    pub fn eval_ambient(&self, p: &Point, t: &Rat) -> Result<Point, crate::expr::EvalError> {
        match self {
            Homotopy::Interp { from, to } => {
                let a = from.eval_ambient(p)?;
                let b = to.eval_ambient(p)?;
                let s = Rat::one() - t.clone();
                Ok(Point::new(
                    a.0.iter()
                        .zip(b.0.iter())
                        .map(|(x, y)| &(&s * x) + &(t * y))
                        .collect(),
                ))
            }
            Homotopy::Explicit { map } => {
                let mut coords = p.0.clone();
                coords.push(t.clone());
                map.eval_ambient(&Point::new(coords))
            }
        }
    }
}

/// Context data for a rel-A check.
pub struct RelMarks<'a> {
    pub context: &'a [String],
    pub source: &'a BTreeMap<String, Location>,
    pub target: &'a BTreeMap<String, Location>,
}

/// Common refinement of two maps over the same domain: cells with both
/// affine forms.
fn common_refinement(
    f: &DiMap,
    g: &DiMap,
    domain: &Geometry,
) -> Result<Vec<(Cell, AffMap, AffMap)>, PlError> {
    let pf = crate::plmap::refine(f, domain)?;
    let pg = crate::plmap::refine(g, domain)?;
    let mut out = Vec::new();
    for a in &pf.pieces {
        for b in &pg.pieces {
            let (alo, ahi) = a.cell.bbox();
            let (blo, bhi) = b.cell.bbox();
            let overlap = alo.0.iter().zip(bhi.0.iter()).all(|(x, y)| x <= y)
                && blo.0.iter().zip(ahi.0.iter()).all(|(x, y)| x <= y);
            if !overlap {
                continue;
            }
            if let Some(c) = a.cell.intersect(&b.cell) {
                out.push((c, a.map.clone(), b.map.clone()));
            }
        }
    }
    Ok(out)
}

/// `from <= to` pointwise on the refinement; witness on failure.
fn pointwise_le(common: &[(Cell, AffMap, AffMap)]) -> Option<Failure> {
    for (cell, a, b) in common {
        for coord in 0..a.dim_out() {
            let diff = b.rows[coord].sub(&a.rows[coord]);
            for v in &cell.verts {
                if diff.eval(v).is_negative() {
                    return Some(Failure {
                        stage: "order".into(),
                        reason: format!(
                            "not monotone in t: endpoint order fails at {} (coordinate {}: {} > {})",
                            v,
                            coord,
                            a.rows[coord].eval(v),
                            b.rows[coord].eval(v)
                        ),
                    });
                }
            }
        }
    }
    None
}

enum BoxOutcome {
    Safe,
    Hit { at: Point, t: Rat },
    Unresolved,
}

/// Does the segment [a, b] (a <= b componentwise) meet the open box?
fn seg_hits_open_box(a: &Point, b: &Point, lo: &Point, hi: &Point) -> Option<Rat> {
    let mut t_lo = Rat::zero();
    let mut t_hi = Rat::one();
    let mut strict_lo = false;
    let mut strict_hi = false;
    for i in 0..a.dim() {
        let d = &b.0[i] - &a.0[i];
        if d.is_zero() {
            if a.0[i] <= lo.0[i] || a.0[i] >= hi.0[i] {
                return None;
            }
            continue;
        }
        // lo_i < a_i + t d < hi_i with d > 0
        let enter = (&lo.0[i] - &a.0[i]) / d.clone();
        let exit = (&hi.0[i] - &a.0[i]) / d;
        if enter > t_lo || (enter == t_lo && !strict_lo) {
            t_lo = enter;
            strict_lo = true;
        }
        if exit < t_hi || (exit == t_hi && !strict_hi) {
            t_hi = exit;
            strict_hi = true;
        }
    }
    if t_lo < t_hi {
        Some((&t_lo + &t_hi) / Rat::int(2))
    } else {
        None
    }
}

/// Exact check that the swept family over a cell avoids one open box.
fn family_avoids_open_box(
    cell: &Cell,
    a: &AffMap,
    b: &AffMap,
    lo: &Point,
    hi: &Point,
    depth: u32,
) -> BoxOutcome {
    let dim_out = a.dim_out();
    // Affine separations: the whole family stays on one side on some axis.
    for i in 0..dim_out {
        if cell.verts.iter().all(|v| b.rows[i].eval(v) <= lo.0[i]) {
            return BoxOutcome::Safe;
        }
        if cell.verts.iter().all(|v| a.rows[i].eval(v) >= hi.0[i]) {
            return BoxOutcome::Safe;
        }
    }
    if dim_out == 1 {
        // One axis only: the family hits the open interval iff some point
        // has b > lo and a < hi with positive margin.
        let t_max = max_min_margin(cell, &[
            {
                let mut f = b.rows[0].clone();
                f.konst = &f.konst - &lo.0[0];
                f
            },
            {
                let mut f = a.rows[0].neg();
                f.konst = &f.konst + &hi.0[0];
                f
            },
        ]);
        return match t_max {
            Some((m, at)) if m.is_positive() => {
                let av = a.eval(&at);
                let bv = b.eval(&at);
                let t = seg_hits_open_box(&av, &bv, lo, hi).unwrap_or_else(Rat::zero);
                BoxOutcome::Hit { at, t }
            }
            _ => BoxOutcome::Safe,
        };
    }
    // Quadratic separations: entering one axis only after exiting the other.
    let d: Vec<AffineForm> = (0..dim_out)
        .map(|i| b.rows[i].sub(&a.rows[i]))
        .collect();
    let enter = |i: usize| {
        let mut f = a.rows[i].neg();
        f.konst = &f.konst + &lo.0[i];
        f // lo_i - a_i
    };
    let exit = |i: usize| {
        let mut f = a.rows[i].neg();
        f.konst = &f.konst + &hi.0[i];
        f // hi_i - a_i
    };
    let q12 = QuadForm::product(&enter(0), &d[1]).sub(&QuadForm::product(&exit(1), &d[0]));
    if !q12.min_over(cell).is_negative() {
        return BoxOutcome::Safe;
    }
    let q21 = QuadForm::product(&enter(1), &d[0]).sub(&QuadForm::product(&exit(0), &d[1]));
    if !q21.min_over(cell).is_negative() {
        return BoxOutcome::Safe;
    }
    // Witness scan.
    let mut samples = cell.verts.clone();
    samples.push(cell.interior_point());
    for s in &samples {
        let av = a.eval(s);
        let bv = b.eval(s);
        if let Some(t) = seg_hits_open_box(&av, &bv, lo, hi) {
            return BoxOutcome::Hit {
                at: s.clone(),
                t,
            };
        }
    }
    if depth == 0 {
        return BoxOutcome::Unresolved;
    }
    // Split by a sign-mixing affine locus, or through the middle.
    let mut split_form: Option<AffineForm> = None;
    let mut candidates: Vec<AffineForm> = Vec::new();
    for i in 0..dim_out {
        candidates.push(enter(i));
        candidates.push(exit(i));
        let mut bl = b.rows[i].clone();
        bl.konst = &bl.konst - &lo.0[i];
        candidates.push(bl);
        let mut bh = b.rows[i].clone();
        bh.konst = &bh.konst - &hi.0[i];
        candidates.push(bh);
        candidates.push(d[i].clone());
    }
    for cand in &candidates {
        if cell.is_cut_by(cand) {
            split_form = Some(cand.clone());
            break;
        }
    }
    let split_form = split_form.unwrap_or_else(|| {
        // Axis-aligned cut through the interior.
        let ip = cell.interior_point();
        let (blo, bhi) = cell.bbox();
        let axis = (0..cell.ambient)
            .max_by(|&i, &j| {
                let di = &bhi.0[i] - &blo.0[i];
                let dj = &bhi.0[j] - &blo.0[j];
                di.cmp(&dj)
            })
            .unwrap_or(0);
        let mut f = AffineForm::var(cell.ambient, axis);
        f.konst = -ip.0[axis].clone();
        f
    });
    let (ge, le) = cell.split(&split_form);
    for part in [ge, le].into_iter().flatten() {
        match family_avoids_open_box(&part, a, b, lo, hi, depth - 1) {
            BoxOutcome::Safe => {}
            other => return other,
        }
    }
    BoxOutcome::Safe
}

/// max over the cell of min(forms) via an LP; the witness point comes back.
fn max_min_margin(cell: &Cell, forms: &[AffineForm]) -> Option<(Rat, Point)> {
    // Variables: the cell coordinates plus the margin m.
    let n = cell.ambient;
    let mut cons: Vec<LinConstraint> = Vec::new();
    for c in &cell.constraints {
        let mut coef = c.form.coef.clone();
        coef.push(Rat::zero());
        cons.push(LinConstraint {
            form: AffineForm::new(coef, c.form.konst.clone()),
            rel: c.rel,
        });
    }
    for f in forms {
        // f(x) - m >= 0
        let mut coef = f.coef.clone();
        coef.push(-Rat::one());
        cons.push(LinConstraint::ge(AffineForm::new(coef, f.konst.clone())));
    }
    let mut obj_coef: Vec<Rat> = (0..n).map(|_| Rat::zero()).collect();
    obj_coef.push(Rat::one());
    let obj = AffineForm::new(obj_coef, Rat::zero());
    let (blo, _) = cell.bbox();
    let mut lower = blo.0.clone();
    // The margin is bounded below by some crude constant.
    lower.push(Rat::int(-1_000_000));
    match maximize(n + 1, &lower, &cons, &obj) {
        LpResult::Optimal { value, point } => {
            Some((value, Point::new(point[..n].to_vec())))
        }
        _ => None,
    }
}

/// Sweep containment of the interpolation family into a region codomain.
fn interp_into_region(
    common: &[(Cell, AffMap, AffMap)],
    region: &RectRegion,
) -> Option<Failure> {
    let removed = removed_cells(region);
    for (cell, a, b) in common {
        // Endpoint images within the outer box (segments stay inside by
        // convexity).
        for m in [a, b] {
            for v in &cell.verts {
                let img = m.eval(v);
                if !region.outer().contains(&img) {
                    return Some(Failure {
                        stage: "containment".into(),
                        reason: format!("homotopy leaves the outer box at {} -> {}", v, img),
                    });
                }
            }
        }
        for rc in &removed {
            match rc.dim() {
                2 => {
                    let (lo, hi) = rc.bbox();
                    match family_avoids_open_box(cell, a, b, &lo, &hi, 10) {
                        BoxOutcome::Safe => {}
                        BoxOutcome::Hit { at, t } => {
                            return Some(Failure {
                                stage: "containment".into(),
                                reason: format!(
                                    "homotopy enters removed material: base point {}, t = {}",
                                    at, t
                                ),
                            })
                        }
                        BoxOutcome::Unresolved => {
                            return Some(Failure {
                                stage: "containment".into(),
                                reason: "sweep containment could not be certified".into(),
                            })
                        }
                    }
                }
                1 => {
                    // A removed wall: only families lying on its carrier
                    // line can touch its relative interior without entering
                    // the neighboring removed boxes.
                    let (lo, hi) = rc.bbox();
                    let axis = (0..region.dim())
                        .find(|&i| lo.0[i] == hi.0[i])
                        .expect("wall is axis-aligned");
                    let other = 1 - axis;
                    let w = lo.0[axis].clone();
                    let on_line = cell.verts.iter().all(|v| {
                        a.rows[axis].eval(v) == w && b.rows[axis].eval(v) == w
                    });
                    if !on_line {
                        continue;
                    }
                    // exists base point with B_other > wall_lo and
                    // A_other < wall_hi simultaneously?
                    let f1 = {
                        let mut f = b.rows[other].clone();
                        f.konst = &f.konst - &lo.0[other];
                        f
                    };
                    let f2 = {
                        let mut f = a.rows[other].neg();
                        f.konst = &f.konst + &hi.0[other];
                        f
                    };
                    if let Some((m, at)) = max_min_margin(cell, &[f1, f2]) {
                        if m.is_positive() {
                            return Some(Failure {
                                stage: "containment".into(),
                                reason: format!(
                                    "homotopy slides along removed wall at base point {}",
                                    at
                                ),
                            });
                        }
                    }
                }
                _ => {}
            }
        }
    }
    None
}

/// Sweep containment into a segment complex: per piece the family must stay
/// constant or sweep inside one covered carrier line.
fn interp_into_segments(
    common: &[(Cell, AffMap, AffMap)],
    segs: &SegSet,
) -> Option<Failure> {
    for (cell, a, b) in common {
        if a == b {
            continue;
        }
        let mut pts: Vec<Point> = Vec::new();
        for v in &cell.verts {
            pts.push(a.eval(v));
            pts.push(b.eval(v));
        }
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            continue;
        }
        let u = pts[0].clone();
        let dir: Vec<Rat> = pts
            .iter()
            .find_map(|p| {
                let d: Vec<Rat> = p.0.iter().zip(u.0.iter()).map(|(x, y)| x - y).collect();
                if d.iter().all(|c| c.is_zero()) {
                    None
                } else {
                    Some(d)
                }
            })
            .expect("distinct image points");
        if segs.dim == 2 {
            for p in &pts {
                let dx = &p.0[0] - &u.0[0];
                let dy = &p.0[1] - &u.0[1];
                if !(&dir[0] * &dy - &dir[1] * &dx).is_zero() {
                    return Some(Failure {
                        stage: "containment".into(),
                        reason: "homotopy sweeps a two-dimensional sheet into a one-complex"
                            .into(),
                    });
                }
            }
        }
        let param = |p: &Point| -> Rat {
            p.0.iter()
                .zip(u.0.iter())
                .zip(dir.iter())
                .map(|((x, y), d)| (x - y) * d)
                .sum()
        };
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for v in &cell.verts {
            for m in [a, b] {
                let t = param(&m.eval(v));
                if lo.as_ref().map_or(true, |l| &t < l) {
                    lo = Some(t.clone());
                }
                if hi.as_ref().map_or(true, |h| &t > h) {
                    hi = Some(t);
                }
            }
        }
        if let Some(fail) = crate::plmap::interp_coverage_check(
            &u,
            &dir,
            &lo.unwrap(),
            &hi.unwrap(),
            segs,
        ) {
            return Some(fail);
        }
    }
    None
}

/// Verifies one linear-interpolation dihomotopy (the lemma route, which is
/// complete for interpolations between dimaps).
pub fn check_interp(
    from: &DiMap,
    to: &DiMap,
    domain: &Geometry,
    codomain: &Geometry,
    rel: Option<&RelMarks<'_>>,
) -> Result<Verdict, PlError> {
    match domain {
        Geometry::Branched(space) => {
            let Geometry::Branched(cod) = codomain else {
                return Err(PlError::Unsupported("mixed homotopy kinds".into()));
            };
            check_interp_branched(from, to, space, cod, rel)
        }
        _ => {
            match check_dimap(from, domain, codomain)? {
                Verdict::Fail(f) => {
                    return Ok(Verdict::fail(
                        "endpoint",
                        format!("t=0 endpoint is not a dimap: {}", f.reason),
                    ))
                }
                Verdict::Pass => {}
            }
            match check_dimap(to, domain, codomain)? {
                Verdict::Fail(f) => {
                    return Ok(Verdict::fail(
                        "endpoint",
                        format!("t=1 endpoint is not a dimap: {}", f.reason),
                    ))
                }
                Verdict::Pass => {}
            }
            let common = common_refinement(from, to, domain)?;
            if let Some(f) = pointwise_le(&common) {
                return Ok(Verdict::Fail(f));
            }
            if let Some(rel) = rel {
                for name in rel.context {
                    let src = rel
                        .source
                        .get(name)
                        .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
                    let want = rel
                        .target
                        .get(name)
                        .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
                    for m in [from, to] {
                        let got = m.eval_location(src)?;
                        if &got != want {
                            return Ok(Verdict::fail(
                                "rel",
                                format!(
                                    "context point {} moves during the homotopy: {:?} != {:?}",
                                    name, got, want
                                ),
                            ));
                        }
                    }
                }
            }
            let fail = match codomain {
                Geometry::Region(r) => interp_into_region(&common, r),
                Geometry::Segments(s) => interp_into_segments(&common, s),
                Geometry::Branched(_) => unreachable!(),
            };
            match fail {
                Some(f) => Ok(Verdict::Fail(f)),
                None => Ok(Verdict::Pass),
            }
        }
    }
}

fn check_interp_branched(
    from: &DiMap,
    to: &DiMap,
    space: &BranchedSpace,
    codomain: &BranchedSpace,
    rel: Option<&RelMarks<'_>>,
) -> Result<Verdict, PlError> {
    for m in [from, to] {
        match check_dimap(
            m,
            &Geometry::Branched(space.clone()),
            &Geometry::Branched(codomain.clone()),
        )? {
            Verdict::Fail(f) => {
                return Ok(Verdict::fail(
                    "endpoint",
                    format!("homotopy endpoint is not a dimap: {}", f.reason),
                ))
            }
            Verdict::Pass => {}
        }
    }
    // Pointwise order arc by arc, at the joint refinement samples.
    for arc in space.arcs.keys() {
        let (_, pf) = branched_arc_pwa(from, space, arc)?;
        let (_, pg) = branched_arc_pwa(to, space, arc)?;
        let mut samples: Vec<Rat> = Vec::new();
        for pwa in [&pf, &pg] {
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
            let fv = from.eval_branched(&ap)?;
            let gv = to.eval_branched(&ap)?;
            let ok = if fv.arc == gv.arc {
                fv.at <= gv.at
            } else if codomain.same_point(&fv, &gv) {
                true
            } else {
                // Rewrite a constant endpoint through an identification.
                codomain
                    .idents
                    .iter()
                    .any(|(x, y)| {
                        (codomain.same_point(&fv, x) && y.arc == gv.arc && y.at <= gv.at)
                            || (codomain.same_point(&fv, y) && x.arc == gv.arc && x.at <= gv.at)
                    })
            };
            if !ok {
                return Ok(Verdict::fail(
                    "order",
                    format!("not monotone in t at {:?}: {:?} vs {:?}", ap, fv, gv),
                ));
            }
        }
    }
    // Identified base points stay identified for every t.
    for (p, q) in &space.idents {
        let fp = from.eval_branched(p)?;
        let fq = from.eval_branched(q)?;
        let gp = to.eval_branched(p)?;
        let gq = to.eval_branched(q)?;
        let same_values = fp.arc == fq.arc && fp.at == fq.at && gp.arc == gq.arc && gp.at == gq.at;
        let constant = codomain.same_point(&fp, &gp)
            && codomain.same_point(&fq, &gq)
            && codomain.same_point(&fp, &fq);
        if !(same_values || constant) {
            return Ok(Verdict::fail(
                "identification",
                format!("identified points {:?} ~ {:?} separate during the homotopy", p, q),
            ));
        }
    }
    if let Some(rel) = rel {
        for name in rel.context {
            let src = rel
                .source
                .get(name)
                .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
            let want = rel
                .target
                .get(name)
                .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
            let (Location::Arc(_), Location::Arc(wp)) = (src, want) else {
                return Err(PlError::Unsupported("ambient marks on branched space".into()));
            };
            for m in [from, to] {
                let got = m.eval_location(src)?;
                let Location::Arc(gp) = &got else {
                    return Err(PlError::Unsupported("mark image kind".into()));
                };
                if !codomain.same_point(gp, wp) {
                    return Ok(Verdict::fail(
                        "rel",
                        format!("context point {} moves during the homotopy", name),
                    ));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// General check of a homotopy against its declared endpoints, rel A.
pub fn check_dihomotopy(
    h: &Homotopy,
    f: &DiMap,
    g: &DiMap,
    domain: &Geometry,
    codomain: &Geometry,
    rel: Option<&RelMarks<'_>>,
) -> Result<Verdict, PlError> {
    match h {
        Homotopy::Interp { from, to } => {
            if let Some((at, v1, v2)) = maps_equal(from, f, domain)? {
                return Ok(Verdict::fail(
                    "endpoint",
                    format!("t=0 restriction differs from f at {:?}: {:?} vs {:?}", at, v1, v2),
                ));
            }
            if let Some((at, v1, v2)) = maps_equal(to, g, domain)? {
                return Ok(Verdict::fail(
                    "endpoint",
                    format!("t=1 restriction differs from g at {:?}: {:?} vs {:?}", at, v1, v2),
                ));
            }
            check_interp(from, to, domain, codomain, rel)
        }
        Homotopy::Explicit { map } => {
            let Geometry::Region(base) = domain else {
                return Err(PlError::Unsupported(
                    "explicit homotopies need a region base".into(),
                ));
            };
            if base.dim() != 1 {
                return Err(PlError::Unsupported(
                    "explicit homotopies are supported over one-dimensional bases".into(),
                ));
            }
            let product = product_with_interval(base);
            // Restrictions at t=0 and t=1 must equal f and g.
            let at_t = |t: Rat| -> DiMap {
                let embed = PlStage {
                    dim_in: 1,
                    coords: vec![
                        crate::expr::Expr::var(1, 0),
                        crate::expr::Expr::konst(1, t),
                    ],
                };
                match map {
                    DiMap::Ambient {
                        dim_out, stages, ..
                    } => {
                        let mut all = vec![embed];
                        all.extend(stages.iter().cloned());
                        DiMap::Ambient {
                            dim_in: 1,
                            dim_out: *dim_out,
                            stages: all,
                        }
                    }
                    DiMap::Branched { .. } => unreachable!(),
                }
            };
            if let Some((at, v1, v2)) = maps_equal(&at_t(Rat::zero()), f, domain)? {
                return Ok(Verdict::fail(
                    "endpoint",
                    format!("t=0 restriction differs from f at {:?}: {:?} vs {:?}", at, v1, v2),
                ));
            }
            if let Some((at, v1, v2)) = maps_equal(&at_t(Rat::one()), g, domain)? {
                return Ok(Verdict::fail(
                    "endpoint",
                    format!("t=1 restriction differs from g at {:?}: {:?} vs {:?}", at, v1, v2),
                ));
            }
            if let Some(rel) = rel {
                for name in rel.context {
                    let Some(Location::Ambient(p)) = rel.source.get(name) else {
                        return Err(PlError::UnknownMark(name.clone()));
                    };
                    let want = rel
                        .target
                        .get(name)
                        .ok_or_else(|| PlError::UnknownMark(name.clone()))?;
                    // The track t -> H(p, t) must stay at the mark.
                    for t in [Rat::zero(), Rat::new(1, 3), Rat::new(1, 2), Rat::one()] {
                        let h_val = h.eval_ambient(p, &t)?;
                        if &Location::Ambient(h_val.clone()) != want {
                            return Ok(Verdict::fail(
                                "rel",
                                format!(
                                    "context point {} moves at t = {}: {:?}",
                                    name, t, h_val
                                ),
                            ));
                        }
                    }
                    // Exact: the restriction to {p} x [0,1] is constant.
                    let track = {
                        let embed = PlStage {
                            dim_in: 1,
                            coords: vec![
                                crate::expr::Expr::konst(1, p.0[0].clone()),
                                crate::expr::Expr::var(1, 0),
                            ],
                        };
                        match map {
                            DiMap::Ambient {
                                dim_out, stages, ..
                            } => {
                                let mut all = vec![embed];
                                all.extend(stages.iter().cloned());
                                DiMap::Ambient {
                                    dim_in: 1,
                                    dim_out: *dim_out,
                                    stages: all,
                                }
                            }
                            DiMap::Branched { .. } => unreachable!(),
                        }
                    };
                    let Location::Ambient(wp) = want else {
                        return Err(PlError::Unsupported("mark kind".into()));
                    };
                    let constant = DiMap::single(
                        1,
                        wp.0.iter()
                            .map(|c| crate::expr::Expr::konst(1, c.clone()))
                            .collect(),
                    );
                    let unit = Geometry::Region(RectRegion::unit_cube(1));
                    if let Some((at, v1, v2)) = maps_equal(&track, &constant, &unit)? {
                        return Ok(Verdict::fail(
                            "rel",
                            format!(
                                "context point {} moves during the homotopy at {:?}: {:?} vs {:?}",
                                name, at, v1, v2
                            ),
                        ));
                    }
                }
            }
            check_dimap(map, &Geometry::Region(product), codomain)
        }
    }
}

/// The base region crossed with the directed unit interval.
fn product_with_interval(base: &RectRegion) -> RectRegion {
    let lift = |p: &Point, t: Rat| {
        let mut c = p.0.clone();
        c.push(t);
        Point::new(c)
    };
    let outer = crate::geom::AxisBox::new(
        lift(base.outer().lo(), Rat::zero()),
        lift(base.outer().hi(), Rat::one()),
    )
    .expect("product box");
    let forbidden = base
        .forbidden()
        .iter()
        .map(|b| {
            crate::geom::AxisBox::new(lift(b.lo(), Rat::zero()), lift(b.hi(), Rat::one()))
                .expect("product box")
        })
        .collect();
    RectRegion::new(outer, forbidden).expect("product region")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The homotopy runs from the earlier node to the later one.
    Fwd,
    /// The homotopy runs from the later node back to the earlier one.
    Bwd,
}

/// A zigzag of linear interpolations through the listed maps.
#[derive(Debug, Clone)]
pub struct Chain {
    pub nodes: Vec<DiMap>,
    pub dirs: Vec<Direction>,
}

/// How the second zigzag (f o g ~ id_C) is supplied.
#[derive(Debug, Clone)]
pub enum CbChain {
    Explicit(Chain),
    /// Reuse the first chain's nodes restricted to C (the paper's usual
    /// "the dihomotopies restrict" argument).
    RestrictBc,
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub context: Vec<String>,
    pub space_b: MarkedGeom,
    pub space_c: MarkedGeom,
    pub map_f: DiMap,
    pub map_g: DiMap,
    pub chain_bc: Chain,
    pub chain_cb: CbChain,
}

fn fail_stage(prefix: &str, f: Failure) -> Verdict {
    Verdict::Fail(Failure {
        stage: format!("{}: {}", prefix, f.stage),
        reason: f.reason,
    })
}

/// Verifies one zigzag: nodes are self-maps of `space`, the first must be
/// the identity, the last must equal `last`, and every step an admissible
/// dihomotopy rel the context.
fn verify_chain(
    chain: &Chain,
    last: &DiMap,
    space: &MarkedGeom,
    context: &[String],
    prefix: &str,
) -> Result<Verdict, PlError> {
    if chain.nodes.is_empty() || chain.dirs.len() + 1 != chain.nodes.len() {
        return Err(PlError::BadGeometry(format!(
            "{}: malformed chain ({} nodes, {} steps)",
            prefix,
            chain.nodes.len(),
            chain.dirs.len()
        )));
    }
    let identity = match &space.geometry {
        Geometry::Branched(_) => DiMap::branched_identity(),
        Geometry::Region(r) => DiMap::identity(r.dim()),
        Geometry::Segments(s) => DiMap::identity(s.dim),
    };
    if let Some((at, v1, v2)) = maps_equal(&chain.nodes[0], &identity, &space.geometry)? {
        return Ok(Verdict::fail(
            prefix,
            format!(
                "chain does not start at the identity: differs at {:?} ({:?} vs {:?})",
                at, v1, v2
            ),
        ));
    }
    let last_node = chain.nodes.last().unwrap();
    if let Some((at, v1, v2)) = maps_equal(last_node, last, &space.geometry)? {
        return Ok(Verdict::fail(
            prefix,
            format!(
                "chain does not end at the required composite: differs at {:?} ({:?} vs {:?})",
                at, v1, v2
            ),
        ));
    }
    let rel = RelMarks {
        context,
        source: &space.marks,
        target: &space.marks,
    };
    for (i, dir) in chain.dirs.iter().enumerate() {
        let (from, to) = match dir {
            Direction::Fwd => (&chain.nodes[i], &chain.nodes[i + 1]),
            Direction::Bwd => (&chain.nodes[i + 1], &chain.nodes[i]),
        };
        match check_interp(from, to, &space.geometry, &space.geometry, Some(&rel))? {
            Verdict::Fail(f) => {
                return Ok(fail_stage(&format!("{} step {}", prefix, i + 1), f))
            }
            Verdict::Pass => {}
        }
    }
    Ok(Verdict::Pass)
}

/// Full verification of a dihomotopy-equivalence certificate rel A.
pub fn verify_equivalence_certificate(cert: &Certificate) -> Result<Verdict, PlError> {
    for name in &cert.context {
        for (space, tag) in [(&cert.space_b, "B"), (&cert.space_c, "C")] {
            let Some(loc) = space.marks.get(name) else {
                return Err(PlError::UnknownMark(format!("{} in {}", name, tag)));
            };
            if !space.mark_ok(loc) {
                return Ok(Verdict::fail(
                    "marks",
                    format!("marked point {} of {} is not in the space", name, tag),
                ));
            }
        }
    }
    match check_dimap(&cert.map_f, &cert.space_b.geometry, &cert.space_c.geometry)? {
        Verdict::Fail(f) => return Ok(fail_stage("map f", f)),
        Verdict::Pass => {}
    }
    match check_dimap(&cert.map_g, &cert.space_c.geometry, &cert.space_b.geometry)? {
        Verdict::Fail(f) => return Ok(fail_stage("map g", f)),
        Verdict::Pass => {}
    }
    match check_context_preserving(&cert.map_f, &cert.space_b, &cert.space_c, &cert.context)? {
        Verdict::Fail(f) => return Ok(fail_stage("map f", f)),
        Verdict::Pass => {}
    }
    match check_context_preserving(&cert.map_g, &cert.space_c, &cert.space_b, &cert.context)? {
        Verdict::Fail(f) => return Ok(fail_stage("map g", f)),
        Verdict::Pass => {}
    }
    let gf = cert.map_g.after(&cert.map_f);
    match verify_chain(
        &cert.chain_bc,
        &gf,
        &cert.space_b,
        &cert.context,
        "chain B",
    )? {
        Verdict::Fail(f) => return Ok(Verdict::Fail(f)),
        Verdict::Pass => {}
    }
    let fg = cert.map_f.after(&cert.map_g);
    let cb = match &cert.chain_cb {
        CbChain::Explicit(chain) => chain.clone(),
        CbChain::RestrictBc => cert.chain_bc.clone(),
    };
    match verify_chain(&cb, &fg, &cert.space_c, &cert.context, "chain C")? {
        Verdict::Fail(f) => return Ok(Verdict::Fail(f)),
        Verdict::Pass => {}
    }
    Ok(Verdict::Pass)
}
