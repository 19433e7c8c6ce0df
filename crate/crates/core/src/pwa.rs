//! Piecewise-affine normal form.
//!
//! A pipeline of piecewise-linear stages is resolved, over a cell
//! decomposition of the domain, into pieces that each carry one affine map.
//! `max`/`min` nodes split cells along their equality loci; piecewise cases
//! split cells along their guard boundaries, with first-matching-case
//! semantics. A case whose guard is degenerate (contains an equality)
//! contributes lower-dimensional pieces that override the surrounding ones,
//! exactly as evaluation does.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cellgeo::Cell;
use crate::expr::{AffineForm, Expr, LinConstraint};
use crate::geom::Point;

/// An affine map Q^din -> Q^dout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffMap {
    pub rows: Vec<AffineForm>,
}

impl AffMap {
    pub fn identity(dim: usize) -> AffMap {
        AffMap {
            rows: (0..dim).map(|i| AffineForm::var(dim, i)).collect(),
        }
    }

    pub fn dim_in(&self) -> usize {
        self.rows.first().map_or(0, |r| r.dim())
    }

    pub fn dim_out(&self) -> usize {
        self.rows.len()
    }

    pub fn eval(&self, p: &Point) -> Point {
        Point::new(self.rows.iter().map(|r| r.eval(p)).collect())
    }

    /// Every linear coefficient nonnegative (monotone along any box order).
    pub fn nonneg_coeffs(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.coef.iter().all(|c| !c.is_negative()))
    }
}

/// One stage of a map: an expression per output coordinate.
#[derive(Clone, Debug)]
pub struct PlStage {
    pub dim_in: usize,
    pub coords: Vec<Expr>,
}

impl PlStage {
    pub fn dim_out(&self) -> usize {
        self.coords.len()
    }
}

#[derive(Clone, Debug)]
pub struct Piece {
    pub cell: Cell,
    pub map: AffMap,
}

#[derive(Clone, Debug)]
pub struct Pwa {
    pub dim_in: usize,
    pub dim_out: usize,
    pub pieces: Vec<Piece>,
}

#[derive(Debug, Clone)]
pub enum PwaError {
    /// No piecewise case covers this point of the domain.
    Incomplete { at: Point },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for PwaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PwaError::Incomplete { at } => {
                write!(f, "piecewise definition incomplete at {}", at)
            }
            PwaError::DimensionMismatch { expected, got } => {
                write!(f, "stage expects dimension {}, got {}", expected, got)
            }
        }
    }
}

/// Resolves the stages over the given domain cells.
pub fn normalize(
    domain_cells: &[Cell],
    stages: &[PlStage],
    dim_in: usize,
) -> Result<Pwa, PwaError> {
    let mut pieces: Vec<Piece> = domain_cells
        .iter()
        .map(|c| Piece {
            cell: c.clone(),
            map: AffMap::identity(dim_in),
        })
        .collect();
    let mut cur_dim = dim_in;
    for stage in stages {
        if stage.dim_in != cur_dim {
            return Err(PwaError::DimensionMismatch {
                expected: stage.dim_in,
                got: cur_dim,
            });
        }
        let mut next: Vec<Piece> = Vec::new();
        for piece in &pieces {
            let mut acc: Vec<(Cell, Vec<AffineForm>)> = vec![(piece.cell.clone(), Vec::new())];
            for coord in &stage.coords {
                let mut refined: Vec<(Cell, Vec<AffineForm>)> = Vec::new();
                for (cell, rows) in &acc {
                    for (sub, form) in resolve(coord, cell, &piece.map)? {
                        let mut rows = rows.clone();
                        rows.push(form);
                        refined.push((sub, rows));
                    }
                }
                acc = refined;
            }
            for (cell, rows) in acc {
                next.push(Piece {
                    cell,
                    map: AffMap { rows },
                });
            }
        }
        cur_dim = stage.dim_out();
        pieces = next;
    }
    Ok(Pwa {
        dim_in,
        dim_out: cur_dim,
        pieces,
    })
}

/// Resolves one scalar expression over a cell, through the incoming affine
/// map. Returned forms are over the original domain coordinates.
fn resolve(
    expr: &Expr,
    cell: &Cell,
    inmap: &AffMap,
) -> Result<Vec<(Cell, AffineForm)>, PwaError> {
    match expr {
        Expr::Aff(f) => {
            if f.dim() != inmap.dim_out() {
                return Err(PwaError::DimensionMismatch {
                    expected: f.dim(),
                    got: inmap.dim_out(),
                });
            }
            Ok(vec![(cell.clone(), f.compose(&inmap.rows))])
        }
        Expr::Max(es) => combine(es, cell, inmap, true),
        Expr::Min(es) => combine(es, cell, inmap, false),
        Expr::Cases(cases) => resolve_cases(cases, cell, inmap),
    }
}

/// Folds max/min over sub-expressions, splitting by difference loci.
fn combine(
    es: &[Expr],
    cell: &Cell,
    inmap: &AffMap,
    take_max: bool,
) -> Result<Vec<(Cell, AffineForm)>, PwaError> {
    let mut acc = resolve(&es[0], cell, inmap)?;
    for e in &es[1..] {
        let mut next: Vec<(Cell, AffineForm)> = Vec::new();
        for (c1, f1) in &acc {
            for (c2, f2) in resolve(e, c1, inmap)? {
                let Some(c) = c1.intersect(&c2) else {
                    continue;
                };
                let diff = f1.sub(&f2);
                if !c.is_cut_by(&diff) {
                    let mut pick_first = true;
                    for v in &c.verts {
                        let val = diff.eval(v);
                        if !val.is_zero() {
                            pick_first = val.is_positive() == take_max;
                            break;
                        }
                    }
                    next.push((c, if pick_first { f1.clone() } else { f2.clone() }));
                } else {
                    let (ge, le) = c.split(&diff);
                    if let Some(ge) = ge {
                        next.push((ge, if take_max { f1.clone() } else { f2.clone() }));
                    }
                    if let Some(le) = le {
                        next.push((le, if take_max { f2.clone() } else { f1.clone() }));
                    }
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// First-matching-case resolution over a cell.
fn resolve_cases(
    cases: &[(Vec<LinConstraint>, Expr)],
    cell: &Cell,
    inmap: &AffMap,
) -> Result<Vec<(Cell, AffineForm)>, PwaError> {
    // Pull guards back through the incoming affine map.
    let pulled: Vec<Vec<LinConstraint>> = cases
        .iter()
        .map(|(guard, _)| {
            guard
                .iter()
                .map(|c| LinConstraint {
                    form: c.form.compose(&inmap.rows),
                    rel: c.rel,
                })
                .collect()
        })
        .collect();
    // Overlay: split the cell by every guard boundary that cuts it.
    let mut atoms: Vec<Cell> = vec![cell.clone()];
    for guard in &pulled {
        for c in guard {
            let mut split: Vec<Cell> = Vec::new();
            for atom in &atoms {
                if atom.is_cut_by(&c.form) {
                    let (ge, le) = atom.split(&c.form);
                    split.extend(ge);
                    split.extend(le);
                } else {
                    split.push(atom.clone());
                }
            }
            atoms = split;
        }
    }
    let guard_holds_on = |guard: &[LinConstraint], atom: &Cell| -> bool {
        guard
            .iter()
            .all(|c| atom.verts.iter().all(|v| c.holds_at(v)))
    };
    let mut out: Vec<(Cell, AffineForm)> = Vec::new();
    for atom in &atoms {
        let case = pulled.iter().position(|guard| guard_holds_on(guard, atom));
        match case {
            Some(k) => out.extend(resolve(&cases[k].1, atom, inmap)?),
            None => {
                return Err(PwaError::Incomplete {
                    at: atom.interior_point(),
                })
            }
        }
    }
    // Degenerate guards claim lower-dimensional material inside atoms that
    // resolved to a later case; add those pieces explicitly so they override.
    for (k, guard) in pulled.iter().enumerate() {
        if !guard.iter().any(|c| c.is_equality()) {
            continue;
        }
        let mut region = Some(cell.clone());
        for c in guard {
            region = region.and_then(|r| r.clip(c.clone()));
        }
        let Some(region) = region else { continue };
        // First-match: strip the parts claimed by earlier cases.
        let mut parts: Vec<Cell> = vec![region];
        for earlier in &pulled[..k] {
            let mut next_parts: Vec<Cell> = Vec::new();
            for part in &parts {
                if guard_holds_on(earlier, part) {
                    continue;
                }
                let mut fragments = vec![part.clone()];
                for c in earlier {
                    let mut split: Vec<Cell> = Vec::new();
                    for frag in &fragments {
                        if frag.is_cut_by(&c.form) {
                            let (ge, le) = frag.split(&c.form);
                            split.extend(ge);
                            split.extend(le);
                        } else {
                            split.push(frag.clone());
                        }
                    }
                    fragments = split;
                }
                for frag in fragments {
                    if !guard_holds_on(earlier, &frag) {
                        next_parts.push(frag);
                    }
                }
            }
            parts = next_parts;
        }
        for part in parts {
            out.extend(resolve(&cases[k].1, &part, inmap)?);
        }
    }
    Ok(out)
}

impl Pwa {
    /// Distinct affine maps appearing among the pieces.
    pub fn distinct_maps(&self) -> Vec<&AffMap> {
        let mut out: Vec<&AffMap> = Vec::new();
        for p in &self.pieces {
            if !out.iter().any(|m| **m == p.map) {
                out.push(&p.map);
            }
        }
        out
    }
}

/// Interior sample points of a cell that pin down an affine map on it: the
/// centroid plus points nudged from the centroid toward each vertex.
pub fn interior_samples(cell: &Cell) -> Vec<Point> {
    let c = cell.interior_point();
    let mut out = vec![c.clone()];
    for v in &cell.verts {
        let mid = Point::new(
            c.0.iter()
                .zip(v.0.iter())
                .map(|(a, b)| (a + b) / crate::rat::Rat::int(2))
                .collect(),
        );
        if !out.contains(&mid) {
            out.push(mid);
        }
    }
    out
}

/// A short label for error messages: the piece's bounding box.
pub fn piece_label(p: &Piece) -> String {
    let (lo, hi) = p.cell.bbox();
    alloc::format!("cell[{}..{}]", lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ri, Rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt2(x: Rat, y: Rat) -> Point {
        Point::new(vec![x, y])
    }

    fn unit_square_cell() -> Cell {
        Cell::from_box(&pt2(ri(0), ri(0)), &pt2(ri(1), ri(1)))
    }

    #[test]
    fn max_splits_into_two_triangles() {
        let stage = PlStage {
            dim_in: 2,
            coords: vec![Expr::max2(Expr::var(2, 0), Expr::var(2, 1))],
        };
        let pwa = normalize(&[unit_square_cell()], &[stage], 2).unwrap();
        assert_eq!(pwa.pieces.len(), 2);
        for p in &pwa.pieces {
            let v = p.cell.interior_point();
            let expected = v.0[0].clone().max(v.0[1].clone());
            assert_eq!(p.map.eval(&v).0[0], expected);
        }
    }

    #[test]
    fn composite_stages_agree_with_tree_eval() {
        let s1 = PlStage {
            dim_in: 2,
            coords: vec![
                Expr::max2(Expr::var(2, 0), Expr::var(2, 1)),
                Expr::var(2, 1),
            ],
        };
        let s2 = PlStage {
            dim_in: 2,
            coords: vec![
                Expr::min2(
                    Expr::Aff(AffineForm::new(vec![ri(1), ri(0)], rat(1, 4))),
                    Expr::Aff(AffineForm::new(vec![ri(0), ri(1)], rat(1, 4))),
                ),
                Expr::var(2, 0),
            ],
        };
        let pwa = normalize(&[unit_square_cell()], &[s1.clone(), s2.clone()], 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = pt2(
                Rat::new(rng.gen_range(0..=12), 12),
                Rat::new(rng.gen_range(0..=12), 12),
            );
            let mid = Point::new(
                s1.coords
                    .iter()
                    .map(|e| e.eval(&p).unwrap())
                    .collect::<Vec<_>>(),
            );
            let want = Point::new(
                s2.coords
                    .iter()
                    .map(|e| e.eval(&mid).unwrap())
                    .collect::<Vec<_>>(),
            );
            let piece = pwa.pieces.iter().find(|pc| pc.cell.contains(&p)).unwrap();
            assert_eq!(piece.map.eval(&p), want);
        }
    }

    #[test]
    fn degenerate_guard_produces_override_piece() {
        // (2x - 3/5, y) on the segment y = 1/5, 2/5 <= x <= 3/5, identity
        // elsewhere: evaluation and pieces must agree pointwise with
        // first-match semantics.
        let stretch = Expr::Cases(vec![
            (
                vec![
                    LinConstraint::var_eq(2, 1, rat(1, 5)),
                    LinConstraint::var_ge(2, 0, rat(2, 5)),
                    LinConstraint::var_le(2, 0, rat(3, 5)),
                ],
                Expr::Aff(AffineForm::new(vec![ri(2), ri(0)], rat(-3, 5))),
            ),
            (Vec::new(), Expr::var(2, 0)),
        ]);
        let stage = PlStage {
            dim_in: 2,
            coords: vec![stretch.clone(), Expr::var(2, 1)],
        };
        let pwa = normalize(&[unit_square_cell()], &[stage], 2).unwrap();
        let on_line = pt2(rat(1, 2), rat(1, 5));
        assert_eq!(stretch.eval(&on_line).unwrap(), rat(2, 5));
        let witness = pwa
            .pieces
            .iter()
            .any(|p| p.cell.contains(&on_line) && p.map.eval(&on_line).0[0] == rat(2, 5));
        assert!(witness, "override piece missing");
        let off_line = pt2(rat(1, 2), rat(1, 4));
        let piece = pwa.pieces.iter().find(|p| p.cell.contains(&off_line)).unwrap();
        assert_eq!(piece.map.eval(&off_line).0[0], rat(1, 2));
    }

    #[test]
    fn incomplete_cases_error() {
        let partial = Expr::Cases(vec![(
            vec![LinConstraint::var_le(1, 0, rat(1, 2))],
            Expr::var(1, 0),
        )]);
        let stage = PlStage {
            dim_in: 1,
            coords: vec![partial],
        };
        let cell = Cell::from_box(&Point::new(vec![ri(0)]), &Point::new(vec![ri(1)]));
        match normalize(&[cell], &[stage], 1) {
            Err(PwaError::Incomplete { .. }) => {}
            other => panic!("expected incompleteness, got {:?}", other),
        }
    }
}
