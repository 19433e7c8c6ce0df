//! Exact convex cells in ambient dimension 1 or 2.
//!
//! A cell is a bounded convex polyhedron given by affine constraints together
//! with its computed vertex set. Cells of every dimension (poin, segment,
//! polygon) are first-class: regions with holes decompose into mixed-
//! dimensional cells, and degenerate piecewise guards produce segment cells.
//!
//! Everything here is exact; a cell is never approximated.

use alloc::vec::Vec;

use crate::expr::{AffineForm, LinConstraint, Rel};
use crate::geom::Point;
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct Cell {
    pub ambient: usize,
    pub constraints: Vec<LinConstraint>,
    /// Canonical vertices: convex-position order for polygons, sorted along
    /// the carrier line for segments.
    pub verts: Vec<Point>,
}

/// Solves `a = 0, b = 0` for two affine forms in two variables.
fn solve2(a: &AffineForm, b: &AffineForm) -> Option<Point> {
    let det = &a.coef[0] * &b.coef[1] - &a.coef[1] * &b.coef[0];
    if det.is_zero() {
        return None;
    }
    // a0 x + a1 y = -ka ; b0 x + b1 y = -kb
    let ka = -&a.konst;
    let kb = -&b.konst;
    let x = (&ka * &b.coef[1] - &a.coef[1] * &kb) / det.clone();
    let y = (&a.coef[0] * &kb - &ka * &b.coef[0]) / det;
    Some(Point::new(alloc::vec![x, y]))
}

fn solve1(a: &AffineForm) -> Option<Point> {
    if a.coef[0].is_zero() {
        return None;
    }
    Some(Point::new(alloc::vec![&(-&a.konst) / &a.coef[0]]))
}

fn satisfies(p: &Point, c: &LinConstraint) -> bool {
    c.holds_at(p)
}

/// Scales a constraint so equal halfplanes compare equal.
fn normalize_constraint(c: &LinConstraint) -> LinConstraint {
    let lead = c.form.coef.iter().find(|v| !v.is_zero());
    let scale = match lead {
        Some(l) => l.abs().recip(),
        None => return c.clone(),
    };
    LinConstraint {
        form: AffineForm {
            coef: c.form.coef.iter().map(|v| v * &scale).collect(),
            konst: &c.form.konst * &scale,
        },
        rel: c.rel,
    }
}

impl Cell {
    /// Builds the cell from constraints. Returns `None` when empty. The
    /// constraint set must describe a bounded set (all callers clip inside an
    /// outer box).
    pub fn from_constraints(ambient: usize, constraints: Vec<LinConstraint>) -> Option<Cell> {
        let mut cons: Vec<LinConstraint> = Vec::new();
        for c in &constraints {
            let n = normalize_constraint(c);
            if n.form.is_constant() {
                // Constant constraint: either trivially true or cell empty.
                let k = &n.form.konst;
                let ok = match n.rel {
                    Rel::Ge => !k.is_negative(),
                    Rel::Le => !k.is_positive(),
                    Rel::Eq => k.is_zero(),
                };
                if !ok {
                    return None;
                }
                continue;
            }
            if !cons
                .iter()
                .any(|e| e.rel == n.rel && e.form == n.form)
            {
                cons.push(n);
            }
        }
        let mut cands: Vec<Point> = Vec::new();
        match ambient {
            1 => {
                for c in &cons {
                    if let Some(p) = solve1(&c.form) {
                        cands.push(p);
                    }
                }
            }
            2 => {
                for i in 0..cons.len() {
                    for j in (i + 1)..cons.len() {
                        if let Some(p) = solve2(&cons[i].form, &cons[j].form) {
                            cands.push(p);
                        }
                    }
                }
            }
            _ => panic!("cells only supported in ambient dimension 1 or 2"),
        }
        cands.retain(|p| cons.iter().all(|c| satisfies(p, c)));
        cands.sort();
        cands.dedup();
        if cands.is_empty() {
            return None;
        }
        let verts = canonical_vertices(cands);
        Some(Cell {
            ambient,
            constraints: cons,
            verts,
        })
    }

    pub fn point(p: Point) -> Cell {
        let dim = p.dim();
        let cons = (0..dim)
            .map(|i| LinConstraint::var_eq(dim, i, p.0[i].clone()))
            .collect();
        Cell {
            ambient: dim,
            constraints: cons,
            verts: alloc::vec![p],
        }
    }

    pub fn segment(p: Point, q: Point) -> Cell {
        let dim = p.dim();
        assert_eq!(dim, q.dim());
        let mut cons: Vec<LinConstraint> = Vec::new();
        if dim == 2 {
            // Carrier line through p, q: (q-p) x (v-p) = 0.
            let dx = &q.0[0] - &p.0[0];
            let dy = &q.0[1] - &p.0[1];
            let form = AffineForm {
                coef: alloc::vec![-dy.clone(), dx.clone()],
                konst: &dy * &p.0[0] - &dx * &p.0[1],
            };
            cons.push(LinConstraint::eq(form));
            // Bounds along the direction: dot(v, d) between dot(p, d), dot(q, d).
            let dir = AffineForm {
                coef: alloc::vec![dx.clone(), dy.clone()],
                konst: Rat::zero(),
            };
            let at_p = dir.eval(&p);
            let at_q = dir.eval(&q);
            let (lo, hi) = if at_p <= at_q {
                (at_p, at_q)
            } else {
                (at_q, at_p)
            };
            let mut lo_form = dir.clone();
            lo_form.konst = -lo;
            cons.push(LinConstraint::ge(lo_form));
            let mut hi_form = dir;
            hi_form.konst = -hi;
            cons.push(LinConstraint::le(hi_form));
        } else {
            let (lo, hi) = if p.0[0] <= q.0[0] {
                (p.0[0].clone(), q.0[0].clone())
            } else {
                (q.0[0].clone(), p.0[0].clone())
            };
            cons.push(LinConstraint::var_ge(1, 0, lo));
            cons.push(LinConstraint::var_le(1, 0, hi));
        }
        let mut verts = alloc::vec![p, q];
        verts.sort();
        verts.dedup();
        Cell {
            ambient: dim,
            constraints: cons,
            verts,
        }
    }

    /// Convex hull of a point set, as a cell.
    pub fn from_points(ambient: usize, pts: &[Point]) -> Option<Cell> {
        let mut pts: Vec<Point> = pts.to_vec();
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            return None;
        }
        let verts = canonical_vertices(pts);
        match hull_dim(&verts) {
            0 => Some(Cell::point(verts[0].clone())),
            1 => Some(Cell::segment(
                verts[0].clone(),
                verts[verts.len() - 1].clone(),
            )),
            _ => {
                let n = verts.len();
                let centroid = {
                    let count = Rat::int(n as i64);
                    let cx: Rat =
                        verts.iter().map(|p| p.0[0].clone()).sum::<Rat>() / count.clone();
                    let cy: Rat = verts.iter().map(|p| p.0[1].clone()).sum::<Rat>() / count;
                    Point::new(alloc::vec![cx, cy])
                };
                let mut cons = Vec::with_capacity(n);
                for i in 0..n {
                    let a = &verts[i];
                    let b = &verts[(i + 1) % n];
                    let dx = &b.0[0] - &a.0[0];
                    let dy = &b.0[1] - &a.0[1];
                    if dx.is_zero() && dy.is_zero() {
                        continue;
                    }
                    // cross(b - a, p - a) with the interior on the >= side.
                    let mut form = AffineForm {
                        coef: alloc::vec![-dy.clone(), dx.clone()],
                        konst: &dy * &a.0[0] - &dx * &a.0[1],
                    };
                    if form.eval(&centroid).is_negative() {
                        form = form.neg();
                    }
                    cons.push(LinConstraint::ge(form));
                }
                Some(Cell {
                    ambient,
                    constraints: cons,
                    verts,
                })
            }
        }
    }

    /// Axis-aligned closed box cell.
    pub fn from_box(lo: &Point, hi: &Point) -> Cell {
        let dim = lo.dim();
        let mut cons = Vec::new();
        for i in 0..dim {
            if lo.0[i] == hi.0[i] {
                cons.push(LinConstraint::var_eq(dim, i, lo.0[i].clone()));
            } else {
                cons.push(LinConstraint::var_ge(dim, i, lo.0[i].clone()));
                cons.push(LinConstraint::var_le(dim, i, hi.0[i].clone()));
            }
        }
        Cell::from_constraints(dim, cons).expect("box cell is nonempty")
    }

    /// Affine-hull dimension (0, 1 or 2).
    pub fn dim(&self) -> usize {
        hull_dim(&self.verts)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|c| satisfies(p, c))
    }

    /// A point in the relative interior (the vertex centroid).
    pub fn interior_point(&self) -> Point {
        let n = Rat::int(self.verts.len() as i64);
        let dim = self.ambient;
        let mut acc: Vec<Rat> = (0..dim).map(|_| Rat::zero()).collect();
        for v in &self.verts {
            for i in 0..dim {
                acc[i] = &acc[i] + &v.0[i];
            }
        }
        Point::new(acc.into_iter().map(|c| c / n.clone()).collect())
    }

    /// Intersection with the halfspace/hyperplane of `c`; `None` if empty.
    pub fn clip(&self, c: LinConstraint) -> Option<Cell> {
        // Skip the rebuild when the constraint does not cut the cell.
        let all_inside = self.verts.iter().all(|v| satisfies(v, &c));
        if all_inside {
            let mut cell = self.clone();
            if c.is_equality() || self.verts.iter().any(|v| c.form.eval(v).is_zero()) {
                cell.constraints.push(normalize_constraint(&c));
                return Cell::from_constraints(self.ambient, cell.constraints);
            }
            return Some(cell);
        }
        let mut cons = self.constraints.clone();
        cons.push(c);
        Cell::from_constraints(self.ambient, cons)
    }

    pub fn intersect(&self, other: &Cell) -> Option<Cell> {
        debug_assert_eq!(self.ambient, other.ambient);
        let mut cons = self.constraints.clone();
        cons.extend(other.constraints.iter().cloned());
        Cell::from_constraints(self.ambient, cons)
    }

    /// Splits by the zero set of `form` into (>= side, <= side). Sides that
    /// are empty come back as `None`.
    pub fn split(&self, form: &AffineForm) -> (Option<Cell>, Option<Cell>) {
        let ge = self.clip(LinConstraint::ge(form.clone()));
        let le = self.clip(LinConstraint::le(form.clone()));
        (ge, le)
    }

    /// Does `form` change sign strictly inside the cell?
    pub fn is_cut_by(&self, form: &AffineForm) -> bool {
        let mut has_pos = false;
        let mut has_neg = false;
        for v in &self.verts {
            let val = form.eval(v);
            if val.is_positive() {
                has_pos = true;
            }
            if val.is_negative() {
                has_neg = true;
            }
        }
        has_pos && has_neg
    }

    pub fn bbox(&self) -> (Point, Point) {
        let dim = self.ambient;
        let mut lo = self.verts[0].0.clone();
        let mut hi = self.verts[0].0.clone();
        for v in &self.verts[1..] {
            for i in 0..dim {
                if v.0[i] < lo[i] {
                    lo[i] = v.0[i].clone();
                }
                if v.0[i] > hi[i] {
                    hi[i] = v.0[i].clone();
                }
            }
        }
        (Point::new(lo), Point::new(hi))
    }

    /// Boundary edges as vertex pairs (polygon: hull edges; segment: itself).
    pub fn edges(&self) -> Vec<(Point, Point)> {
        match self.dim() {
            2 => {
                let n = self.verts.len();
                (0..n)
                    .map(|i| (self.verts[i].clone(), self.verts[(i + 1) % n].clone()))
                    .collect()
            }
            1 => alloc::vec![(
                self.verts.first().unwrap().clone(),
                self.verts.last().unwrap().clone()
            )],
            _ => Vec::new(),
        }
    }
}

fn hull_dim(verts: &[Point]) -> usize {
    if verts.len() <= 1 {
        return 0;
    }
    let p0 = &verts[0];
    let mut dir: Option<Vec<Rat>> = None;
    for v in &verts[1..] {
        let d: Vec<Rat> = v.0.iter().zip(p0.0.iter()).map(|(a, b)| a - b).collect();
        if d.iter().all(|c| c.is_zero()) {
            continue;
        }
        match &dir {
            None => dir = Some(d),
            Some(u) => {
                if u.len() == 2 {
                    let cross = &u[0] * &d[1] - &u[1] * &d[0];
                    if !cross.is_zero() {
                        return 2;
                    }
                }
            }
        }
    }
    if dir.is_some() {
        1
    } else {
        0
    }
}

/// Orders candidate vertices canonically: prunes points interior to segments
/// between others, then walks the hull (or sorts along the carrier line).
fn canonical_vertices(mut pts: Vec<Point>) -> Vec<Point> {
    if pts.len() <= 2 {
        return pts;
    }
    let d = hull_dim(&pts);
    if d <= 1 {
        pts.sort();
        let first = pts.first().unwrap().clone();
        let last = pts.last().unwrap().clone();
        if first == last {
            return alloc::vec![first];
        }
        return alloc::vec![first, last];
    }
    // Prune non-extreme points: p strictly between a and b.
    let mut extreme: Vec<Point> = Vec::new();
    'outer: for p in &pts {
        for a in &pts {
            for b in &pts {
                if a == b || a == p || b == p {
                    continue;
                }
                if between_strict(a, p, b) {
                    continue 'outer;
                }
            }
        }
        extreme.push(p.clone());
    }
    // Angular order around the centroid.
    let n = Rat::int(extreme.len() as i64);
    let cx: Rat = extreme.iter().map(|p| p.0[0].clone()).sum::<Rat>() / n.clone();
    let cy: Rat = extreme.iter().map(|p| p.0[1].clone()).sum::<Rat>() / n;
    extreme.sort_by(|p, q| {
        let pv = (&p.0[0] - &cx, &p.0[1] - &cy);
        let qv = (&q.0[0] - &cx, &q.0[1] - &cy);
        let hp = half(&pv);
        let hq = half(&qv);
        if hp != hq {
            return hp.cmp(&hq);
        }
        let cross = &pv.0 * &qv.1 - &pv.1 * &qv.0;
        if cross.is_positive() {
            core::cmp::Ordering::Less
        } else if cross.is_negative() {
            core::cmp::Ordering::Greater
        } else {
            core::cmp::Ordering::Equal
        }
    });
    extreme
}

/// 0 for the upper half-plane sweep start, 1 for lower; splits the angular
/// order at direction (1, 0).
fn half(v: &(Rat, Rat)) -> u8 {
    if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Is `p` strictly inside segment [a, b]?
fn between_strict(a: &Point, p: &Point, b: &Point) -> bool {
    let dim = a.dim();
    if dim == 2 {
        let abx = &b.0[0] - &a.0[0];
        let aby = &b.0[1] - &a.0[1];
        let apx = &p.0[0] - &a.0[0];
        let apy = &p.0[1] - &a.0[1];
        let cross = &abx * &apy - &aby * &apx;
        if !cross.is_zero() {
            return false;
        }
        let dot = &abx * &apx + &aby * &apy;
        let len2 = &abx * &abx + &aby * &aby;
        dot.is_positive() && dot < len2
    } else {
        (a.0[0] < p.0[0] && p.0[0] < b.0[0]) || (b.0[0] < p.0[0] && p.0[0] < a.0[0])
    }
}

/// A quadratic form over 1 or 2 variables, exact.
#[derive(Clone, Debug)]
pub struct QuadForm {
    pub dim: usize,
    /// Symmetric coefficient matrix entries: q[i][j] multiplies x_i x_j.
    pub quad: Vec<Vec<Rat>>,
    pub lin: Vec<Rat>,
    pub konst: Rat,
}

impl QuadForm {
    pub fn zero(dim: usize) -> QuadForm {
        QuadForm {
            dim,
            quad: (0..dim)
                .map(|_| (0..dim).map(|_| Rat::zero()).collect())
                .collect(),
            lin: (0..dim).map(|_| Rat::zero()).collect(),
            konst: Rat::zero(),
        }
    }

    /// The product of two affine forms.
    pub fn product(a: &AffineForm, b: &AffineForm) -> QuadForm {
        let dim = a.dim();
        let mut q = QuadForm::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                q.quad[i][j] = &a.coef[i] * &b.coef[j];
            }
        }
        // Symmetrize.
        for i in 0..dim {
            for j in (i + 1)..dim {
                let s = (&q.quad[i][j] + &q.quad[j][i]) / Rat::int(2);
                q.quad[i][j] = s.clone();
                q.quad[j][i] = s;
            }
        }
        for i in 0..dim {
            q.lin[i] = &a.coef[i] * &b.konst + &b.coef[i] * &a.konst;
        }
        q.konst = &a.konst * &b.konst;
        q
    }

    pub fn sub(&self, other: &QuadForm) -> QuadForm {
        let dim = self.dim;
        let mut q = QuadForm::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                q.quad[i][j] = &self.quad[i][j] - &other.quad[i][j];
            }
            q.lin[i] = &self.lin[i] - &other.lin[i];
        }
        q.konst = &self.konst - &other.konst;
        q
    }

    pub fn eval(&self, p: &Point) -> Rat {
        let mut acc = self.konst.clone();
        for i in 0..self.dim {
            acc = acc + &self.lin[i] * &p.0[i];
            for j in 0..self.dim {
                acc = acc + &self.quad[i][j] * &p.0[i] * &p.0[j];
            }
        }
        acc
    }

    fn is_affine(&self) -> bool {
        self.quad
            .iter()
            .all(|row| row.iter().all(|c| c.is_zero()))
    }

    /// Exact minimum over a cell: vertices, edge restrictions, and the
    /// interior critical point when it exists.
    pub fn min_over(&self, cell: &Cell) -> Rat {
        let mut best: Option<Rat> = None;
        let mut consider = |v: Rat| {
            best = Some(match best.take() {
                None => v,
                Some(b) => b.min(v),
            });
        };
        for v in &cell.verts {
            consider(self.eval(v));
        }
        if !self.is_affine() {
            for (a, b) in cell.edges() {
                if let Some(v) = self.min_on_segment(&a, &b) {
                    consider(v);
                }
            }
            if cell.dim() == 2 {
                if let Some(p) = self.critical_point() {
                    if cell.contains(&p) {
                        consider(self.eval(&p));
                    }
                }
            }
        }
        best.expect("cell has vertices")
    }

    pub fn max_over(&self, cell: &Cell) -> Rat {
        -self.negated().min_over(cell)
    }

    fn negated(&self) -> QuadForm {
        QuadForm::zero(self.dim).sub(self)
    }

    fn critical_point(&self) -> Option<Point> {
        // gradient: 2 Q x + lin = 0
        match self.dim {
            2 => {
                let a = AffineForm {
                    coef: alloc::vec![
                        &self.quad[0][0] * &Rat::int(2),
                        &self.quad[0][1] * &Rat::int(2)
                    ],
                    konst: self.lin[0].clone(),
                };
                let b = AffineForm {
                    coef: alloc::vec![
                        &self.quad[0][1] * &Rat::int(2),
                        &self.quad[1][1] * &Rat::int(2)
                    ],
                    konst: self.lin[1].clone(),
                };
                solve2(&a, &b)
            }
            1 => {
                let two_a = &self.quad[0][0] * &Rat::int(2);
                if two_a.is_zero() {
                    None
                } else {
                    Some(Point::new(alloc::vec![&(-&self.lin[0]) / &two_a]))
                }
            }
            _ => None,
        }
    }

    /// Minimum of the restriction to segment [a, b], excluding endpoints
    /// (those are covered by the vertex sweep). Returns `None` when the
    /// restriction has no interior critical point.
    fn min_on_segment(&self, a: &Point, b: &Point) -> Option<Rat> {
        // q(a + t d) = A t^2 + B t + C
        let d: Vec<Rat> = b.0.iter().zip(a.0.iter()).map(|(x, y)| x - y).collect();
        let mut qa = Rat::zero();
        let mut qb = Rat::zero();
        for i in 0..self.dim {
            qb = qb + &self.lin[i] * &d[i];
            for j in 0..self.dim {
                qa = qa + &self.quad[i][j] * &d[i] * &d[j];
                qb = qb + &self.quad[i][j] * (&a.0[i] * &d[j] + &a.0[j] * &d[i]);
            }
        }
        if qa.is_zero() {
            return None;
        }
        let t = &(-&qb) / &(&qa * &Rat::int(2));
        if !t.is_positive() || t >= Rat::one() {
            return None;
        }
        let p = Point::new(
            a.0.iter()
                .zip(d.iter())
                .map(|(x, dd)| x + &(dd * &t))
                .collect(),
        );
        Some(self.eval(&p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ri};
    use alloc::vec;

    fn pt2(x: Rat, y: Rat) -> Point {
        Point::new(vec![x, y])
    }

    fn unit_square() -> Cell {
        Cell::from_box(&pt2(ri(0), ri(0)), &pt2(ri(1), ri(1)))
    }

    #[test]
    fn square_vertices() {
        let c = unit_square();
        assert_eq!(c.verts.len(), 4);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&pt2(rat(1, 2), rat(1, 3))));
        assert!(!c.contains(&pt2(ri(2), ri(0))));
    }

    #[test]
    fn clip_to_triangle() {
        // x >= y half of the square.
        let c = unit_square();
        let form = AffineForm::new(vec![ri(1), ri(-1)], ri(0));
        let tri = c.clip(LinConstraint::ge(form)).unwrap();
        assert_eq!(tri.verts.len(), 3);
        assert!(tri.contains(&pt2(rat(3, 4), rat(1, 4))));
        assert!(!tri.contains(&pt2(rat(1, 4), rat(3, 4))));
    }

    #[test]
    fn split_produces_shared_boundary() {
        let c = unit_square();
        let diag = AffineForm::new(vec![ri(1), ri(-1)], ri(0));
        let (ge, le) = c.split(&diag);
        let ge = ge.unwrap();
        let le = le.unwrap();
        assert_eq!(ge.dim(), 2);
        assert_eq!(le.dim(), 2);
        let shared = ge.intersect(&le).unwrap();
        assert_eq!(shared.dim(), 1);
        assert_eq!(shared.verts.len(), 2);
    }

    #[test]
    fn empty_intersection() {
        let a = Cell::from_box(&pt2(ri(0), ri(0)), &pt2(rat(1, 3), rat(1, 3)));
        let b = Cell::from_box(&pt2(rat(1, 2), rat(1, 2)), &pt2(ri(1), ri(1)));
        assert!(a.intersect(&b).is_none());
    }

    #[test]
    fn segment_cell() {
        let s = Cell::segment(pt2(ri(0), ri(0)), pt2(rat(2, 5), rat(2, 5)));
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&pt2(rat(1, 5), rat(1, 5))));
        assert!(!s.contains(&pt2(rat(1, 5), rat(1, 4))));
        assert!(!s.contains(&pt2(rat(1, 2), rat(1, 2))));
    }

    #[test]
    fn quad_min_interior() {
        // (x - 1/2)^2 + (y - 1/2)^2 has its minimum 0 at the center.
        let x = AffineForm::new(vec![ri(1), ri(0)], rat(-1, 2));
        let y = AffineForm::new(vec![ri(0), ri(1)], rat(-1, 2));
        let q = QuadForm::product(&x, &x.clone());
        let q = {
            let q2 = QuadForm::product(&y, &y.clone());
            QuadForm {
                dim: 2,
                quad: (0..2)
                    .map(|i| (0..2).map(|j| &q.quad[i][j] + &q2.quad[i][j]).collect())
                    .collect(),
                lin: (0..2).map(|i| &q.lin[i] + &q2.lin[i]).collect(),
                konst: &q.konst + &q2.konst,
            }
        };
        let c = unit_square();
        assert_eq!(q.min_over(&c), ri(0));
        assert_eq!(q.max_over(&c), rat(1, 2));
    }

    #[test]
    fn quad_min_on_edge() {
        // x*(1-x) restricted to the square: min 0 on the x=0/x=1 edges,
        // max 1/4 along x=1/2.
        let a = AffineForm::new(vec![ri(1), ri(0)], ri(0));
        let b = AffineForm::new(vec![ri(-1), ri(0)], ri(1));
        let q = QuadForm::product(&a, &b);
        let c = unit_square();
        assert_eq!(q.min_over(&c), ri(0));
        assert_eq!(q.max_over(&c), rat(1, 4));
    }
}
