//! Points, componentwise order, axis-aligned boxes and rectilinear regions.
//!
//! A [`RectRegion`] is a closed outer box with a family of forbidden boxes
//! removed. A point is removed iff it lies in the *interior of the union* of
//! the closed forbidden boxes. That reading removes internal walls where two
//! forbidden boxes meet while keeping the outer boundary of the union, which
//! is what the swiss-cheese models of semaphore programs require.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;

/// A point of Q^n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Rat>);

impl Point {
    pub fn new(coords: Vec<Rat>) -> Point {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of comparing two points in the componentwise partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRelation {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionError {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for DimensionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dimension mismatch: {} vs {}", self.left, self.right)
    }
}

/// Componentwise comparison. `Equal` when both directions hold.
pub fn compare_points(p: &Point, q: &Point) -> Result<OrderRelation, DimensionError> {
    if p.dim() != q.dim() {
        return Err(DimensionError {
            left: p.dim(),
            right: q.dim(),
        });
    }
    let mut le = true;
    let mut ge = true;
    for (a, b) in p.0.iter().zip(q.0.iter()) {
        if a > b {
            le = false;
        }
        if a < b {
            ge = false;
        }
    }
    Ok(match (le, ge) {
        (true, true) => OrderRelation::Equal,
        (true, false) => OrderRelation::LessEq,
        (false, true) => OrderRelation::GreaterEq,
        (false, false) => OrderRelation::Incomparable,
    })
}

/// `p <= q` componentwise (allows equality).
pub fn point_le(p: &Point, q: &Point) -> bool {
    matches!(
        compare_points(p, q),
        Ok(OrderRelation::LessEq) | Ok(OrderRelation::Equal)
    )
}

/// An axis-aligned box given by two corners with `lo <= hi` componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisBox {
    lo: Point,
    hi: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxError {
    Dimension(DimensionError),
    Inverted { axis: usize },
}

impl fmt::Display for BoxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxError::Dimension(d) => write!(f, "{}", d),
            BoxError::Inverted { axis } => write!(f, "box has lo > hi on axis {}", axis),
        }
    }
}

impl AxisBox {
    pub fn new(lo: Point, hi: Point) -> Result<AxisBox, BoxError> {
        if lo.dim() != hi.dim() {
            return Err(BoxError::Dimension(DimensionError {
                left: lo.dim(),
                right: hi.dim(),
            }));
        }
        for axis in 0..lo.dim() {
            if lo.0[axis] > hi.0[axis] {
                return Err(BoxError::Inverted { axis });
            }
        }
        Ok(AxisBox { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    /// Closed containment.
    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && (0..self.dim()).all(|i| self.lo.0[i] <= p.0[i] && p.0[i] <= self.hi.0[i])
    }

    /// Does this box contain the box `[lo, hi]` (both closed)?
    fn contains_interval_box(&self, lo: &[Rat], hi: &[Rat]) -> bool {
        (0..self.dim()).all(|i| self.lo.0[i] <= lo[i] && hi[i] <= self.hi.0[i])
    }
}

/// How a point sits relative to a [`RectRegion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionClass {
    /// Inside the outer box, away from the forbidden union.
    Inside,
    /// On the boundary of the forbidden union: retained in the region.
    OnForbiddenBoundary,
    /// In the interior of the union of the (closed) forbidden boxes.
    Removed,
    OutsideOuter,
}

/// An outer closed box with open forbidden material removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectRegion {
    outer: AxisBox,
    forbidden: Vec<AxisBox>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionError {
    Box(BoxError),
    Dimension(DimensionError),
    ForbiddenOutsideOuter { index: usize },
}

impl fmt::Display for RegionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionError::Box(b) => write!(f, "{}", b),
            RegionError::Dimension(d) => write!(f, "{}", d),
            RegionError::ForbiddenOutsideOuter { index } => {
                write!(f, "forbidden box {} is not contained in the outer box", index)
            }
        }
    }
}

impl RectRegion {
    pub fn new(outer: AxisBox, forbidden: Vec<AxisBox>) -> Result<RectRegion, RegionError> {
        for (index, b) in forbidden.iter().enumerate() {
            if b.dim() != outer.dim() {
                return Err(RegionError::Dimension(DimensionError {
                    left: outer.dim(),
                    right: b.dim(),
                }));
            }
            if !(outer.contains(&b.lo) && outer.contains(&b.hi)) {
                return Err(RegionError::ForbiddenOutsideOuter { index });
            }
        }
        Ok(RectRegion { outer, forbidden })
    }

    /// The whole box `[lo, hi]` with nothing removed.
    pub fn solid(outer: AxisBox) -> RectRegion {
        RectRegion {
            outer,
            forbidden: Vec::new(),
        }
    }

    /// The unit cube of the given dimension.
    pub fn unit_cube(dim: usize) -> RectRegion {
        let lo = Point::new((0..dim).map(|_| Rat::zero()).collect());
        let hi = Point::new((0..dim).map(|_| Rat::one()).collect());
        RectRegion::solid(AxisBox::new(lo, hi).unwrap())
    }

    pub fn dim(&self) -> usize {
        self.outer.dim()
    }

    pub fn outer(&self) -> &AxisBox {
        &self.outer
    }

    pub fn forbidden(&self) -> &[AxisBox] {
        &self.forbidden
    }

    /// Is `p` in the interior (taken in the ambient space) of the union of
    /// the closed forbidden boxes?
    ///
    /// Exact local test: around `p` take the minimal grid cells spanned by
    /// the nearest forbidden-box face coordinates on each side; `p` is
    /// interior iff each of the `2^n` local closed cells lies inside some
    /// single closed forbidden box.
    fn in_forbidden_interior(&self, p: &Point) -> bool {
        let n = self.dim();
        if self.forbidden.is_empty() {
            return false;
        }
        if !self.forbidden.iter().any(|b| b.contains(p)) {
            return false;
        }
        // Per axis: closest face coordinate strictly below / above p_i.
        let mut below: Vec<Option<Rat>> = (0..n).map(|_| None).collect();
        let mut above: Vec<Option<Rat>> = (0..n).map(|_| None).collect();
        for b in &self.forbidden {
            for i in 0..n {
                for c in [&b.lo.0[i], &b.hi.0[i]] {
                    if c < &p.0[i] && below[i].as_ref().map_or(true, |cur| c > cur) {
                        below[i] = Some(c.clone());
                    }
                    if c > &p.0[i] && above[i].as_ref().map_or(true, |cur| c < cur) {
                        above[i] = Some(c.clone());
                    }
                }
            }
        }
        let below: Vec<Rat> = (0..n)
            .map(|i| below[i].clone().unwrap_or_else(|| &p.0[i] - &Rat::one()))
            .collect();
        let above: Vec<Rat> = (0..n)
            .map(|i| above[i].clone().unwrap_or_else(|| &p.0[i] + &Rat::one()))
            .collect();
        // Every local cell must be covered by a single closed forbidden box.
        for mask in 0..(1u32 << n) {
            let mut lo = Vec::with_capacity(n);
            let mut hi = Vec::with_capacity(n);
            for i in 0..n {
                if mask & (1 << i) == 0 {
                    lo.push(below[i].clone());
                    hi.push(p.0[i].clone());
                } else {
                    lo.push(p.0[i].clone());
                    hi.push(above[i].clone());
                }
            }
            if !self
                .forbidden
                .iter()
                .any(|b| b.contains_interval_box(&lo, &hi))
            {
                return false;
            }
        }
        true
    }

    pub fn classify(&self, p: &Point) -> Result<RegionClass, DimensionError> {
        if p.dim() != self.dim() {
            return Err(DimensionError {
                left: self.dim(),
                right: p.dim(),
            });
        }
        if !self.outer.contains(p) {
            return Ok(RegionClass::OutsideOuter);
        }
        if self.in_forbidden_interior(p) {
            return Ok(RegionClass::Removed);
        }
        if self.forbidden.iter().any(|b| b.contains(p)) {
            return Ok(RegionClass::OnForbiddenBoundary);
        }
        Ok(RegionClass::Inside)
    }

    /// Is `p` a point of the region (retained)?
    pub fn keeps(&self, p: &Point) -> bool {
        matches!(
            self.classify(p),
            Ok(RegionClass::Inside) | Ok(RegionClass::OnForbiddenBoundary)
        )
    }

    /// All distinct face coordinates along `axis` (outer faces and forbidden
    /// faces), sorted.
    pub fn face_coords(&self, axis: usize) -> Vec<Rat> {
        let mut cs = Vec::new();
        cs.push(self.outer.lo.0[axis].clone());
        cs.push(self.outer.hi.0[axis].clone());
        for b in &self.forbidden {
            cs.push(b.lo.0[axis].clone());
            cs.push(b.hi.0[axis].clone());
        }
        cs.sort();
        cs.dedup();
        cs
    }
}

/// Parses a point from a list of `p/q` strings (used by file formats).
pub fn parse_point(coords: &[String]) -> Result<Point, crate::rat::ParseRatError> {
    let mut v = Vec::with_capacity(coords.len());
    for c in coords {
        v.push(Rat::parse(c)?);
    }
    Ok(Point::new(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ri};
    use alloc::vec;

    fn pt(coords: &[Rat]) -> Point {
        Point::new(coords.to_vec())
    }

    fn swiss_region() -> RectRegion {
        // Unit square with the open plus-shaped cross removed, given as the
        // five boxes of the cross.
        let b = |x0: Rat, y0: Rat, x1: Rat, y1: Rat| {
            AxisBox::new(pt(&[x0, y0]), pt(&[x1, y1])).unwrap()
        };
        RectRegion::new(
            AxisBox::new(pt(&[ri(0), ri(0)]), pt(&[ri(1), ri(1)])).unwrap(),
            vec![
                b(rat(2, 5), rat(2, 5), rat(3, 5), rat(3, 5)), // center
                b(rat(1, 5), rat(2, 5), rat(2, 5), rat(3, 5)), // left arm
                b(rat(3, 5), rat(2, 5), rat(4, 5), rat(3, 5)), // right arm
                b(rat(2, 5), rat(1, 5), rat(3, 5), rat(2, 5)), // bottom arm
                b(rat(2, 5), rat(3, 5), rat(3, 5), rat(4, 5)), // top arm
            ],
        )
        .unwrap()
    }

    #[test]
    fn compare_basic() {
        let p = pt(&[rat(1, 4), rat(1, 4)]);
        let q = pt(&[rat(3, 4), rat(3, 4)]);
        assert_eq!(compare_points(&p, &q).unwrap(), OrderRelation::LessEq);
        assert_eq!(compare_points(&q, &p).unwrap(), OrderRelation::GreaterEq);
        assert_eq!(compare_points(&p, &p).unwrap(), OrderRelation::Equal);
        // The two attachment points of the pushout counterexample.
        let x = pt(&[ri(0), rat(1, 4)]);
        let y = pt(&[rat(3, 4), ri(0)]);
        assert_eq!(compare_points(&x, &y).unwrap(), OrderRelation::Incomparable);
        assert!(compare_points(&x, &pt(&[ri(0)])).is_err());
    }

    #[test]
    fn swiss_classification() {
        let r = swiss_region();
        // c = (2/5, 2/5) sits on the boundary of the cross and is retained.
        assert_eq!(
            r.classify(&pt(&[rat(2, 5), rat(2, 5)])).unwrap(),
            RegionClass::OnForbiddenBoundary
        );
        // The center of the cross is removed.
        assert_eq!(
            r.classify(&pt(&[rat(1, 2), rat(1, 2)])).unwrap(),
            RegionClass::Removed
        );
        // Internal wall between bottom arm and center: removed under
        // interior-of-union semantics even though no single open box holds it.
        assert_eq!(
            r.classify(&pt(&[rat(1, 2), rat(2, 5)])).unwrap(),
            RegionClass::Removed
        );
        // Outer boundary of an arm is retained.
        assert_eq!(
            r.classify(&pt(&[rat(1, 5), rat(1, 2)])).unwrap(),
            RegionClass::OnForbiddenBoundary
        );
        assert_eq!(
            r.classify(&pt(&[rat(1, 10), rat(1, 10)])).unwrap(),
            RegionClass::Inside
        );
        assert_eq!(
            r.classify(&pt(&[ri(2), ri(0)])).unwrap(),
            RegionClass::OutsideOuter
        );
    }

    #[test]
    fn forbidden_face_on_outer_boundary_is_kept() {
        // Square minus the open rectangle (0,1/2) x (0,1): the left edge and
        // the bottom/top segments stay.
        let outer = AxisBox::new(pt(&[ri(0), ri(0)]), pt(&[ri(1), ri(1)])).unwrap();
        let hole = AxisBox::new(pt(&[ri(0), ri(0)]), pt(&[rat(1, 2), ri(1)])).unwrap();
        let r = RectRegion::new(outer, vec![hole]).unwrap();
        assert_eq!(
            r.classify(&pt(&[rat(1, 4), ri(0)])).unwrap(),
            RegionClass::OnForbiddenBoundary
        );
        assert_eq!(
            r.classify(&pt(&[ri(0), rat(1, 2)])).unwrap(),
            RegionClass::OnForbiddenBoundary
        );
        assert_eq!(
            r.classify(&pt(&[rat(1, 4), rat(1, 2)])).unwrap(),
            RegionClass::Removed
        );
    }

    #[test]
    fn shrinking_a_forbidden_box_never_removes_more() {
        // Monotonicity spot check; the randomized suite covers this broadly.
        let outer = AxisBox::new(pt(&[ri(0), ri(0)]), pt(&[ri(1), ri(1)])).unwrap();
        let big = AxisBox::new(pt(&[rat(1, 4), rat(1, 4)]), pt(&[rat(3, 4), rat(3, 4)])).unwrap();
        let small = AxisBox::new(pt(&[rat(1, 3), rat(1, 3)]), pt(&[rat(2, 3), rat(2, 3)])).unwrap();
        let r_big = RectRegion::new(outer.clone(), vec![big]).unwrap();
        let r_small = RectRegion::new(outer, vec![small]).unwrap();
        for ix in 0..=8i64 {
            for iy in 0..=8i64 {
                let p = pt(&[rat(ix, 8), rat(iy, 8)]);
                if r_big.keeps(&p) {
                    assert!(r_small.keeps(&p), "shrink lost {:?}", p);
                }
            }
        }
    }
}
