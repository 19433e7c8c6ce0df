//! Small dense exact-rational linear programming.
//!
//! Two-phase simplex with Bland's rule. Problem sizes here are tiny (a
//! handful of variables, a couple dozen constraints), so a dense tableau
//! over `Rat` is the right tool; exactness matters, speed hardly does.

use alloc::vec::Vec;

use crate::expr::{AffineForm, LinConstraint, Rel};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    Optimal { value: Rat, point: Vec<Rat> },
    Unbounded,
}

/// Maximizes `obj` over `{ z : constraints }` where every variable satisfies
/// `z_i >= lower_i`. The feasible set must be bounded for `Optimal`.
pub fn maximize(
    n_vars: usize,
    lower: &[Rat],
    constraints: &[LinConstraint],
    obj: &AffineForm,
) -> LpResult {
    debug_assert_eq!(lower.len(), n_vars);
    debug_assert_eq!(obj.dim(), n_vars);
    // Substitute z = x + lower with x >= 0.
    // Each constraint row: sum coef x (rel) rhs.
    struct Row {
        coef: Vec<Rat>,
        rel: Rel,
        rhs: Rat,
    }
    let mut rows: Vec<Row> = Vec::new();
    for c in constraints {
        debug_assert_eq!(c.form.dim(), n_vars);
        let shift: Rat = c
            .form
            .coef
            .iter()
            .zip(lower.iter())
            .map(|(a, l)| a * l)
            .sum();
        // form(z) rel 0  <=>  coef.x rel -(konst + coef.lower)
        let rhs = -(&c.form.konst + &shift);
        rows.push(Row {
            coef: c.form.coef.clone(),
            rel: c.rel,
            rhs,
        });
    }
    // Normalize rhs >= 0.
    for r in rows.iter_mut() {
        if r.rhs.is_negative() {
            for a in r.coef.iter_mut() {
                *a = -&*a;
            }
            r.rhs = -&r.rhs;
            r.rel = match r.rel {
                Rel::Ge => Rel::Le,
                Rel::Le => Rel::Ge,
                Rel::Eq => Rel::Eq,
            };
        }
    }
    let m = rows.len();
    // Columns: n_vars structural, then one slack/surplus per inequality,
    // then one artificial per Ge/Eq row.
    let mut n_slack = 0;
    let mut n_art = 0;
    for r in &rows {
        match r.rel {
            Rel::Le => n_slack += 1,
            Rel::Ge => {
                n_slack += 1;
                n_art += 1;
            }
            Rel::Eq => n_art += 1,
        }
    }
    let ncols = n_vars + n_slack + n_art;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut b: Vec<Rat> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut art_cols: Vec<usize> = Vec::new();
    let mut slack_at = n_vars;
    let mut art_at = n_vars + n_slack;
    for r in &rows {
        let mut row: Vec<Rat> = (0..ncols).map(|_| Rat::zero()).collect();
        for (j, v) in r.coef.iter().enumerate() {
            row[j] = v.clone();
        }
        match r.rel {
            Rel::Le => {
                row[slack_at] = Rat::one();
                basis.push(slack_at);
                slack_at += 1;
            }
            Rel::Ge => {
                row[slack_at] = -Rat::one();
                slack_at += 1;
                row[art_at] = Rat::one();
                basis.push(art_at);
                art_cols.push(art_at);
                art_at += 1;
            }
            Rel::Eq => {
                row[art_at] = Rat::one();
                basis.push(art_at);
                art_cols.push(art_at);
                art_at += 1;
            }
        }
        a.push(row);
        b.push(r.rhs.clone());
    }

    pivot_loop_guard(m, ncols);

    // Phase 1: maximize -(sum of artificials).
    if !art_cols.is_empty() {
        let mut obj_row: Vec<Rat> = (0..ncols).map(|_| Rat::zero()).collect();
        let mut obj_val = Rat::zero();
        // -sum(a_j) expressed through the rows where artificials are basic.
        for (i, &bi) in basis.iter().enumerate() {
            if art_cols.contains(&bi) {
                for j in 0..ncols {
                    obj_row[j] = &obj_row[j] + &a[i][j];
                }
                obj_val = &obj_val + &b[i];
            }
        }
        for &c in &art_cols {
            obj_row[c] = Rat::zero();
        }
        if !run_simplex(&mut a, &mut b, &mut basis, &mut obj_row, &mut obj_val) {
            // Phase 1 objective is bounded by construction.
            unreachable!("phase-1 simplex cannot be unbounded");
        }
        if !obj_val.is_zero() {
            return LpResult::Infeasible;
        }
        // Pivot any artificial still basic (at zero level) out of the basis.
        for i in 0..m {
            if art_cols.contains(&basis[i]) {
                if let Some(j) = (0..n_vars + n_slack).find(|&j| !a[i][j].is_zero()) {
                    pivot(&mut a, &mut b, &mut basis, i, j, None);
                }
            }
        }
    }

    // Phase 2: drop artificial columns, maximize the real objective.
    let ncols2 = n_vars + n_slack;
    for i in 0..m {
        a[i].truncate(ncols2);
        if basis[i] >= ncols2 {
            // Redundant all-zero row; keep with a fresh slack-less basis
            // marker. Treat as equality 0 = 0 by leaving it; it cannot be
            // selected for pivoting because its coefficients are zero.
            basis[i] = usize::MAX;
        }
    }
    let mut obj_row: Vec<Rat> = (0..ncols2).map(|_| Rat::zero()).collect();
    for j in 0..n_vars {
        obj_row[j] = obj.coef[j].clone();
    }
    let mut obj_val = Rat::zero();
    // Express the objective through nonbasic variables.
    for i in 0..m {
        let bi = basis[i];
        if bi == usize::MAX || obj_row[bi].is_zero() {
            continue;
        }
        let factor = obj_row[bi].clone();
        for j in 0..ncols2 {
            obj_row[j] = &obj_row[j] - &(&factor * &a[i][j]);
        }
        obj_val = &obj_val - &(&factor * &b[i]);
    }
    if !run_simplex(&mut a, &mut b, &mut basis, &mut obj_row, &mut obj_val) {
        return LpResult::Unbounded;
    }
    // Recover z = x + lower.
    let mut x: Vec<Rat> = (0..n_vars).map(|_| Rat::zero()).collect();
    for i in 0..m {
        if basis[i] < n_vars {
            x[basis[i]] = b[i].clone();
        }
    }
    let point: Vec<Rat> = x
        .into_iter()
        .zip(lower.iter())
        .map(|(v, l)| v + l.clone())
        .collect();
    // obj_val tracks -(current objective); the shift and constant re-enter
    // through direct evaluation, which is simplest and exact.
    let value = obj.eval(&crate::geom::Point::new(point.clone()));
    let _ = obj_val;
    LpResult::Optimal { value, point }
}

fn pivot_loop_guard(_m: usize, _n: usize) {}

/// Maximizes obj_row (reduced-cost form) in place. Returns false if
/// unbounded. Bland's rule throughout.
fn run_simplex(
    a: &mut Vec<Vec<Rat>>,
    b: &mut Vec<Rat>,
    basis: &mut Vec<usize>,
    obj_row: &mut Vec<Rat>,
    obj_val: &mut Rat,
) -> bool {
    let m = a.len();
    let ncols = obj_row.len();
    loop {
        // Entering: smallest index with positive reduced cost.
        let enter = (0..ncols).find(|&j| obj_row[j].is_positive());
        let Some(e) = enter else {
            return true;
        };
        // Leaving: min ratio b_i / a_ie over a_ie > 0, ties by smallest basis.
        let mut best: Option<(Rat, usize)> = None;
        for i in 0..m {
            if basis[i] == usize::MAX {
                continue;
            }
            if a[i][e].is_positive() {
                let ratio = &b[i] / &a[i][e];
                match &best {
                    None => best = Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < *r || (ratio == *r && basis[i] < basis[*bi]) {
                            best = Some((ratio, i));
                        }
                    }
                }
            }
        }
        let Some((_, leave)) = best else {
            return false;
        };
        pivot(a, b, basis, leave, e, Some((obj_row, obj_val)));
    }
}

fn pivot(
    a: &mut Vec<Vec<Rat>>,
    b: &mut Vec<Rat>,
    basis: &mut Vec<usize>,
    r: usize,
    c: usize,
    obj: Option<(&mut Vec<Rat>, &mut Rat)>,
) {
    let m = a.len();
    let ncols = a[r].len();
    let piv = a[r][c].clone();
    debug_assert!(!piv.is_zero());
    for j in 0..ncols {
        a[r][j] = &a[r][j] / &piv;
    }
    b[r] = &b[r] / &piv;
    for i in 0..m {
        if i == r || a[i][c].is_zero() {
            continue;
        }
        let f = a[i][c].clone();
        for j in 0..ncols {
            a[i][j] = &a[i][j] - &(&f * &a[r][j]);
        }
        b[i] = &b[i] - &(&f * &b[r]);
    }
    if let Some((obj_row, obj_val)) = obj {
        if !obj_row[c].is_zero() {
            let f = obj_row[c].clone();
            for j in 0..ncols {
                obj_row[j] = &obj_row[j] - &(&f * &a[r][j]);
            }
            *obj_val = &*obj_val - &(&f * &b[r]);
        }
    }
    basis[r] = c;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::rat::{rat, ri};
    use alloc::vec;
    use alloc::vec::Vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ge(coef: Vec<Rat>, konst: Rat) -> LinConstraint {
        LinConstraint::ge(AffineForm::new(coef, konst))
    }

    fn le(coef: Vec<Rat>, konst: Rat) -> LinConstraint {
        LinConstraint::le(AffineForm::new(coef, konst))
    }

    #[test]
    fn simple_box_lp() {
        // max x + y over [0,1]^2 with x + y <= 3/2.
        let cons = vec![
            ge(vec![ri(1), ri(0)], ri(0)),
            le(vec![ri(1), ri(0)], ri(-1)),
            ge(vec![ri(0), ri(1)], ri(0)),
            le(vec![ri(0), ri(1)], ri(-1)),
            le(vec![ri(1), ri(1)], rat(-3, 2)),
        ];
        let obj = AffineForm::new(vec![ri(1), ri(1)], ri(0));
        match maximize(2, &[ri(0), ri(0)], &cons, &obj) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(3, 2)),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn infeasible_lp() {
        let cons = vec![
            ge(vec![ri(1)], ri(0)),   // x >= 0
            le(vec![ri(1)], ri(1)),   // x <= -1
        ];
        let obj = AffineForm::new(vec![ri(1)], ri(0));
        assert_eq!(maximize(1, &[ri(-5)], &cons, &obj), LpResult::Infeasible);
    }

    #[test]
    fn equality_constraint() {
        // max y s.t. y = x/2, x in [0, 1].
        let cons = vec![
            ge(vec![ri(1), ri(0)], ri(0)),
            le(vec![ri(1), ri(0)], ri(-1)),
            LinConstraint::eq(AffineForm::new(vec![rat(1, 2), ri(-1)], ri(0))),
        ];
        let obj = AffineForm::new(vec![ri(0), ri(1)], ri(0));
        match maximize(2, &[ri(0), ri(-2)], &cons, &obj) {
            LpResult::Optimal { value, point } => {
                assert_eq!(value, rat(1, 2));
                assert_eq!(point, vec![ri(1), rat(1, 2)]);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    /// Brute-force oracle: enumerate basic solutions from constraint pairs
    /// in 2 variables and take the best feasible one.
    fn oracle_max_2d(cons: &[LinConstraint], obj: &AffineForm) -> Option<Rat> {
        let mut best: Option<Rat> = None;
        let bounds: Vec<&LinConstraint> = cons.iter().collect();
        for i in 0..bounds.len() {
            for j in (i + 1)..bounds.len() {
                let a = &bounds[i].form;
                let b = &bounds[j].form;
                let det = &a.coef[0] * &b.coef[1] - &a.coef[1] * &b.coef[0];
                if det.is_zero() {
                    continue;
                }
                let ka = -&a.konst;
                let kb = -&b.konst;
                let x = (&ka * &b.coef[1] - &a.coef[1] * &kb) / det.clone();
                let y = (&a.coef[0] * &kb - &ka * &b.coef[0]) / det;
                let p = Point::new(vec![x, y]);
                if cons.iter().all(|c| c.holds_at(&p)) {
                    let v = obj.eval(&p);
                    best = Some(match best.take() {
                        None => v,
                        Some(b) if v > b => v,
                        Some(b) => b,
                    });
                }
            }
        }
        best
    }

    #[test]
    fn randomized_against_vertex_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(20240217);
        for _ in 0..300 {
            // Random box plus up to three random halfplanes.
            let mut cons = vec![
                ge(vec![ri(1), ri(0)], ri(0)),
                le(vec![ri(1), ri(0)], ri(-4)),
                ge(vec![ri(0), ri(1)], ri(0)),
                le(vec![ri(0), ri(1)], ri(-4)),
            ];
            for _ in 0..rng.gen_range(0..4) {
                let c0 = ri(rng.gen_range(-3..4));
                let c1 = ri(rng.gen_range(-3..4));
                let k = ri(rng.gen_range(-4..5));
                if c0.is_zero() && c1.is_zero() {
                    continue;
                }
                let form = AffineForm::new(vec![c0, c1], k);
                if rng.gen_bool(0.5) {
                    cons.push(LinConstraint::ge(form));
                } else {
                    cons.push(LinConstraint::le(form));
                }
            }
            let obj = AffineForm::new(
                vec![ri(rng.gen_range(-3..4)), ri(rng.gen_range(-3..4))],
                ri(0),
            );
            let lp = maximize(2, &[ri(0), ri(0)], &cons, &obj);
            let oracle = oracle_max_2d(&cons, &obj);
            match (lp, oracle) {
                (LpResult::Infeasible, None) => {}
                (LpResult::Optimal { value, point }, Some(best)) => {
                    assert_eq!(value, best, "lp disagrees with vertex enumeration");
                    let p = Point::new(point);
                    assert!(cons.iter().all(|c| c.holds_at(&p)), "witness infeasible");
                }
                (lp, oracle) => panic!("lp {:?} vs oracle {:?}", lp, oracle),
            }
        }
    }
}
