//! Piecewise-linear expression trees with rational coefficients.
//!
//! The grammar is exactly what the explicit maps in scope need: affine
//! combinations of the input coordinates, `max`, `min`, and guarded piecewise
//! cases with affine guards. Case guards may be degenerate (contain
//! equalities); evaluation takes the first case whose guard holds, with a
//! trailing empty guard acting as the catch-all.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::geom::Point;
use crate::rat::Rat;

/// `coef . x + konst` over a fixed input dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coef: Vec<Rat>,
    pub konst: Rat,
}

impl AffineForm {
    pub fn new(coef: Vec<Rat>, konst: Rat) -> AffineForm {
        AffineForm { coef, konst }
    }

    pub fn constant(dim: usize, value: Rat) -> AffineForm {
        AffineForm {
            coef: (0..dim).map(|_| Rat::zero()).collect(),
            konst: value,
        }
    }

    pub fn var(dim: usize, index: usize) -> AffineForm {
        let mut coef: Vec<Rat> = (0..dim).map(|_| Rat::zero()).collect();
        coef[index] = Rat::one();
        AffineForm {
            coef,
            konst: Rat::zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coef.len()
    }

    pub fn eval(&self, p: &Point) -> Rat {
        debug_assert_eq!(p.dim(), self.dim());
        let mut acc = self.konst.clone();
        for (c, x) in self.coef.iter().zip(p.0.iter()) {
            if !c.is_zero() {
                acc = acc + c * x;
            }
        }
        acc
    }

    /// Substitutes affine inner coordinates: `self(inner(x))`.
    pub fn compose(&self, inner: &[AffineForm]) -> AffineForm {
        debug_assert_eq!(inner.len(), self.dim());
        let in_dim = inner.first().map_or(0, |f| f.dim());
        let mut coef: Vec<Rat> = (0..in_dim).map(|_| Rat::zero()).collect();
        let mut konst = self.konst.clone();
        for (c, f) in self.coef.iter().zip(inner.iter()) {
            if c.is_zero() {
                continue;
            }
            konst = konst + c * &f.konst;
            for (acc, fc) in coef.iter_mut().zip(f.coef.iter()) {
                *acc = &*acc + &(c * fc);
            }
        }
        AffineForm { coef, konst }
    }

    pub fn sub(&self, other: &AffineForm) -> AffineForm {
        AffineForm {
            coef: self
                .coef
                .iter()
                .zip(other.coef.iter())
                .map(|(a, b)| a - b)
                .collect(),
            konst: &self.konst - &other.konst,
        }
    }

    pub fn neg(&self) -> AffineForm {
        AffineForm {
            coef: self.coef.iter().map(|c| -c).collect(),
            konst: -&self.konst,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coef.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coef.iter().enumerate() {
            write!(f, "{}*x{} + ", c, i)?;
        }
        write!(f, "{}", self.konst)
    }
}

/// Relation of an affine form against zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    /// form >= 0
    Ge,
    /// form <= 0
    Le,
    /// form == 0
    Eq,
}

/// One affine constraint `form REL 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinConstraint {
    pub form: AffineForm,
    pub rel: Rel,
}

impl LinConstraint {
    pub fn ge(form: AffineForm) -> LinConstraint {
        LinConstraint { form, rel: Rel::Ge }
    }

    pub fn le(form: AffineForm) -> LinConstraint {
        LinConstraint { form, rel: Rel::Le }
    }

    pub fn eq(form: AffineForm) -> LinConstraint {
        LinConstraint { form, rel: Rel::Eq }
    }

    /// `x_i >= c`
    pub fn var_ge(dim: usize, index: usize, c: Rat) -> LinConstraint {
        let mut f = AffineForm::var(dim, index);
        f.konst = -c;
        LinConstraint::ge(f)
    }

    /// `x_i <= c`
    pub fn var_le(dim: usize, index: usize, c: Rat) -> LinConstraint {
        let mut f = AffineForm::var(dim, index);
        f.konst = -c;
        LinConstraint::le(f)
    }

    /// `x_i == c`
    pub fn var_eq(dim: usize, index: usize, c: Rat) -> LinConstraint {
        let mut f = AffineForm::var(dim, index);
        f.konst = -c;
        LinConstraint::eq(f)
    }

    pub fn holds_at(&self, p: &Point) -> bool {
        let v = self.form.eval(p);
        match self.rel {
            Rel::Ge => !v.is_negative(),
            Rel::Le => !v.is_positive(),
            Rel::Eq => v.is_zero(),
        }
    }

    /// Is the constraint degenerate (an equality), cutting dimension?
    pub fn is_equality(&self) -> bool {
        self.rel == Rel::Eq
    }
}

/// Conjunction of affine constraints. Empty = always true.
pub type Guard = Vec<LinConstraint>;

pub fn guard_holds_at(guard: &Guard, p: &Point) -> bool {
    guard.iter().all(|c| c.holds_at(p))
}

/// A piecewise-linear expression in `dim` input coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Aff(AffineForm),
    Max(Vec<Expr>),
    Min(Vec<Expr>),
    /// First case whose guard holds wins; an empty guard is the catch-all.
    Cases(Vec<(Guard, Expr)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// No piecewise case applies at the point.
    NoCase,
    /// Point not in the declared domain of the map.
    OutsideDomain,
    /// Structural problem (dimension mismatch, unknown arc, ...).
    Malformed,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NoCase => write!(f, "no piecewise case applies"),
            EvalError::OutsideDomain => write!(f, "point outside declared domain"),
            EvalError::Malformed => write!(f, "malformed map"),
        }
    }
}

impl Expr {
    pub fn var(dim: usize, index: usize) -> Expr {
        Expr::Aff(AffineForm::var(dim, index))
    }

    pub fn konst(dim: usize, value: Rat) -> Expr {
        Expr::Aff(AffineForm::constant(dim, value))
    }

    pub fn max2(a: Expr, b: Expr) -> Expr {
        Expr::Max(vec![a, b])
    }

    pub fn min2(a: Expr, b: Expr) -> Expr {
        Expr::Min(vec![a, b])
    }

    pub fn eval(&self, p: &Point) -> Result<Rat, EvalError> {
        match self {
            Expr::Aff(f) => {
                if f.dim() != p.dim() {
                    return Err(EvalError::Malformed);
                }
                Ok(f.eval(p))
            }
            Expr::Max(es) => {
                let mut best: Option<Rat> = None;
                for e in es {
                    let v = e.eval(p)?;
                    best = Some(match best {
                        None => v,
                        Some(b) => b.max(v),
                    });
                }
                best.ok_or(EvalError::Malformed)
            }
            Expr::Min(es) => {
                let mut best: Option<Rat> = None;
                for e in es {
                    let v = e.eval(p)?;
                    best = Some(match best {
                        None => v,
                        Some(b) => b.min(v),
                    });
                }
                best.ok_or(EvalError::Malformed)
            }
            Expr::Cases(cases) => {
                for (guard, e) in cases {
                    if guard_holds_at(guard, p) {
                        return e.eval(p);
                    }
                }
                Err(EvalError::NoCase)
            }
        }
    }

    /// All affine forms reachable in the tree (used to gather breakpoint loci).
    pub fn visit_forms(&self, visit: &mut dyn FnMut(&AffineForm)) {
        match self {
            Expr::Aff(f) => visit(f),
            Expr::Max(es) | Expr::Min(es) => {
                for e in es {
                    e.visit_forms(visit);
                }
            }
            Expr::Cases(cases) => {
                for (guard, e) in cases {
                    for c in guard {
                        visit(&c.form);
                    }
                    e.visit_forms(visit);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ri};

    fn pt2(x: Rat, y: Rat) -> Point {
        Point::new(vec![x, y])
    }

    #[test]
    fn eval_max() {
        let e = Expr::max2(Expr::var(2, 0), Expr::var(2, 1));
        assert_eq!(e.eval(&pt2(rat(3, 10), rat(7, 10))).unwrap(), rat(7, 10));
    }

    #[test]
    fn eval_first_matching_case() {
        // F1 on [0,1]: x below 1/3, 2x - 1/3 on [1/3,2/3], 1 above.
        let x = || Expr::var(1, 0);
        let f1 = Expr::Cases(vec![
            (
                vec![LinConstraint::var_le(1, 0, rat(1, 3))],
                x(),
            ),
            (
                vec![LinConstraint::var_le(1, 0, rat(2, 3))],
                Expr::Aff(AffineForm::new(vec![ri(2)], rat(-1, 3))),
            ),
            (Vec::new(), Expr::konst(1, ri(1))),
        ]);
        let at = |v: Rat| f1.eval(&Point::new(vec![v])).unwrap();
        assert_eq!(at(rat(1, 4)), rat(1, 4));
        assert_eq!(at(rat(1, 3)), rat(1, 3));
        assert_eq!(at(rat(1, 2)), rat(2, 3));
        assert_eq!(at(rat(2, 3)), ri(1));
        assert_eq!(at(rat(9, 10)), ri(1));
    }

    #[test]
    fn affine_compose() {
        // f(x, y) = x + 2y, inner = (y, x - 1)
        let f = AffineForm::new(vec![ri(1), ri(2)], ri(0));
        let inner = [
            AffineForm::var(2, 1),
            AffineForm::new(vec![ri(1), ri(0)], ri(-1)),
        ];
        let g = f.compose(&inner);
        assert_eq!(g.eval(&pt2(ri(3), ri(5))), ri(5) + ri(2) * (ri(3) - ri(1)));
    }
}
