//! The stock piecewise-linear maps and the shipped equivalence certificates.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cert::{CbChain, Certificate, Chain, Direction};
use crate::expr::{AffineForm, Expr, LinConstraint};
use crate::geom::{Point, RectRegion};
use crate::plmap::{
    ArcMap, ArcPoint, BranchStage, BranchedSpace, DiMap, Geometry, Location, MarkedGeom, Seg,
    SegSet,
};
use crate::pwa::PlStage;
use crate::rat::{rat, ri, Rat};

fn pt2(x: Rat, y: Rat) -> Point {
    Point::new(vec![x, y])
}

fn aff1(c: i64, k: Rat) -> Expr {
    Expr::Aff(AffineForm::new(vec![ri(c)], k))
}

/// The first boundary-expansion map of the square-removed example:
/// identity below 1/3, slope 2 through the middle band, clamped at 1.
pub fn f_expand() -> Expr {
    Expr::Cases(vec![
        (vec![LinConstraint::var_le(1, 0, rat(1, 3))], Expr::var(1, 0)),
        (vec![LinConstraint::var_le(1, 0, rat(2, 3))], aff1(2, rat(-1, 3))),
        (Vec::new(), Expr::konst(1, ri(1))),
    ])
}

/// The second map: collapse below 1/3 to 0, then stretch onto [0,1].
pub fn f_squash() -> Expr {
    Expr::Cases(vec![
        (vec![LinConstraint::var_le(1, 0, rat(1, 3))], Expr::konst(1, ri(0))),
        (
            Vec::new(),
            Expr::Aff(AffineForm::new(vec![rat(3, 2)], rat(-1, 2))),
        ),
    ])
}

/// Lifts a one-variable expression to act on one axis of a 2-d input.
fn on_axis(e: &Expr, axis: usize) -> Expr {
    fn lift_form(f: &AffineForm, axis: usize) -> AffineForm {
        let mut coef = vec![Rat::zero(), Rat::zero()];
        coef[axis] = f.coef[0].clone();
        AffineForm::new(coef, f.konst.clone())
    }
    match e {
        Expr::Aff(f) => Expr::Aff(lift_form(f, axis)),
        Expr::Max(es) => Expr::Max(es.iter().map(|x| on_axis(x, axis)).collect()),
        Expr::Min(es) => Expr::Min(es.iter().map(|x| on_axis(x, axis)).collect()),
        Expr::Cases(cases) => Expr::Cases(
            cases
                .iter()
                .map(|(guard, sub)| {
                    (
                        guard
                            .iter()
                            .map(|c| LinConstraint {
                                form: lift_form(&c.form, axis),
                                rel: c.rel,
                            })
                            .collect(),
                        on_axis(sub, axis),
                    )
                })
                .collect(),
        ),
    }
}

/// A 1-d map applied to both axes of the square.
pub fn square_stage(e: &Expr) -> PlStage {
    PlStage {
        dim_in: 2,
        coords: vec![on_axis(e, 0), on_axis(e, 1)],
    }
}

/// `(x, y) -> max(x, y)`.
pub fn max_collapse() -> DiMap {
    DiMap::single(2, vec![Expr::max2(Expr::var(2, 0), Expr::var(2, 1))])
}

/// `x -> (x, x)`.
pub fn diagonal() -> DiMap {
    DiMap::single(1, vec![Expr::var(1, 0), Expr::var(1, 0)])
}

fn guard_box(x0: Rat, x1: Rat, y0: Rat, y1: Rat) -> Vec<LinConstraint> {
    vec![
        LinConstraint::var_ge(2, 0, x0),
        LinConstraint::var_le(2, 0, x1),
        LinConstraint::var_ge(2, 1, y0),
        LinConstraint::var_le(2, 1, y1),
    ]
}

fn x() -> Expr {
    Expr::var(2, 0)
}

fn y() -> Expr {
    Expr::var(2, 1)
}

fn x_plus(k: Rat) -> Expr {
    Expr::Aff(AffineForm::new(vec![ri(1), ri(0)], k))
}

fn y_plus(k: Rat) -> Expr {
    Expr::Aff(AffineForm::new(vec![ri(0), ri(1)], k))
}

/// First swiss-flag stage: fold the lower-left corner onto the diagonal and
/// the two entry strips onto the 1/5 lines.
pub fn swiss_f1() -> PlStage {
    let g_corner = || guard_box(ri(0), rat(1, 5), ri(0), rat(1, 5));
    let g_left = || {
        vec![
            LinConstraint::var_le(2, 0, rat(1, 5)),
            LinConstraint::var_ge(2, 1, rat(1, 5)),
        ]
    };
    let g_bottom = || {
        vec![
            LinConstraint::var_le(2, 1, rat(1, 5)),
            LinConstraint::var_ge(2, 0, rat(1, 5)),
        ]
    };
    PlStage {
        dim_in: 2,
        coords: vec![
            Expr::Cases(vec![
                (g_corner(), Expr::max2(x(), y())),
                (g_left(), Expr::konst(2, rat(1, 5))),
                (g_bottom(), x()),
                (Vec::new(), x()),
            ]),
            Expr::Cases(vec![
                (g_corner(), Expr::max2(x(), y())),
                (g_left(), y()),
                (g_bottom(), Expr::konst(2, rat(1, 5))),
                (Vec::new(), y()),
            ]),
        ],
    }
}

/// Second swiss-flag stage: fold the top-right corner onto the diagonal.
pub fn swiss_f2() -> PlStage {
    let g_corner = || guard_box(rat(4, 5), ri(1), rat(4, 5), ri(1));
    let g_right = || {
        vec![
            LinConstraint::var_ge(2, 0, rat(4, 5)),
            LinConstraint::var_le(2, 1, rat(4, 5)),
        ]
    };
    let g_top = || {
        vec![
            LinConstraint::var_ge(2, 1, rat(4, 5)),
            LinConstraint::var_le(2, 0, rat(4, 5)),
        ]
    };
    PlStage {
        dim_in: 2,
        coords: vec![
            Expr::Cases(vec![
                (g_corner(), Expr::min2(x(), y())),
                (g_right(), Expr::konst(2, rat(4, 5))),
                (g_top(), x()),
                (Vec::new(), x()),
            ]),
            Expr::Cases(vec![
                (g_corner(), Expr::min2(x(), y())),
                (g_right(), y()),
                (g_top(), Expr::konst(2, rat(4, 5))),
                (Vec::new(), y()),
            ]),
        ],
    }
}

/// Third swiss-flag stage: slide the upper-left and lower-right pockets
/// onto their diagonals, fold the upper-right pocket, and stretch the two
/// outer cross faces.
pub fn swiss_f3() -> PlStage {
    let g1 = || guard_box(rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5));
    let g2 = || guard_box(rat(3, 5), rat(4, 5), rat(1, 5), rat(2, 5));
    let g3 = || guard_box(rat(3, 5), rat(4, 5), rat(3, 5), rat(4, 5));
    let g4 = || {
        vec![
            LinConstraint::var_ge(2, 0, rat(2, 5)),
            LinConstraint::var_le(2, 0, rat(3, 5)),
            LinConstraint::var_eq(2, 1, rat(4, 5)),
        ]
    };
    let g5 = || {
        vec![
            LinConstraint::var_eq(2, 0, rat(4, 5)),
            LinConstraint::var_ge(2, 1, rat(2, 5)),
            LinConstraint::var_le(2, 1, rat(3, 5)),
        ]
    };
    PlStage {
        dim_in: 2,
        coords: vec![
            Expr::Cases(vec![
                (g1(), Expr::max2(x(), y_plus(rat(-2, 5)))),
                (g2(), Expr::max2(x(), y_plus(rat(2, 5)))),
                (g3(), Expr::max2(x(), y())),
                (g4(), Expr::Aff(AffineForm::new(vec![ri(2), ri(0)], rat(-2, 5)))),
                (g5(), x()),
                (Vec::new(), x()),
            ]),
            Expr::Cases(vec![
                (g1(), Expr::max2(x_plus(rat(2, 5)), y())),
                (g2(), Expr::max2(x_plus(rat(-2, 5)), y())),
                (g3(), Expr::max2(x(), y())),
                (g4(), y()),
                (g5(), Expr::Aff(AffineForm::new(vec![ri(0), ri(2)], rat(-2, 5)))),
                (Vec::new(), y()),
            ]),
        ],
    }
}

/// Fourth swiss-flag stage: fold the lower-left pocket and stretch the two
/// inner cross faces down to the skeleton.
pub fn swiss_f4() -> PlStage {
    let g1 = || guard_box(rat(1, 5), rat(2, 5), rat(1, 5), rat(2, 5));
    let g2 = || {
        vec![
            LinConstraint::var_ge(2, 0, rat(2, 5)),
            LinConstraint::var_le(2, 0, rat(3, 5)),
            LinConstraint::var_eq(2, 1, rat(1, 5)),
        ]
    };
    let g3 = || {
        vec![
            LinConstraint::var_eq(2, 0, rat(1, 5)),
            LinConstraint::var_ge(2, 1, rat(2, 5)),
            LinConstraint::var_le(2, 1, rat(3, 5)),
        ]
    };
    PlStage {
        dim_in: 2,
        coords: vec![
            Expr::Cases(vec![
                (g1(), Expr::min2(x(), y())),
                (g2(), Expr::Aff(AffineForm::new(vec![ri(2), ri(0)], rat(-3, 5)))),
                (g3(), x()),
                (Vec::new(), x()),
            ]),
            Expr::Cases(vec![
                (g1(), Expr::min2(x(), y())),
                (g2(), y()),
                (g3(), Expr::Aff(AffineForm::new(vec![ri(0), ri(2)], rat(-3, 5)))),
                (Vec::new(), y()),
            ]),
        ],
    }
}

fn ambient(stages: Vec<PlStage>, dim_in: usize, dim_out: usize) -> DiMap {
    DiMap::Ambient {
        dim_in,
        dim_out,
        stages,
    }
}

/// The full swiss-flag collapse f = f4 . f3 . f2 . f1.
pub fn swiss_collapse() -> DiMap {
    ambient(vec![swiss_f1(), swiss_f2(), swiss_f3(), swiss_f4()], 2, 2)
}

/// The square-removed collapse f = (F2 F1) x (F2 F1).
pub fn square_removed_collapse() -> DiMap {
    ambient(
        vec![square_stage(&f_expand()), square_stage(&f_squash())],
        2,
        2,
    )
}

/// The branched model of two intervals attached at their midpoints.
pub fn dx_space() -> BranchedSpace {
    BranchedSpace {
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
    }
}

/// A single point as a branched space.
pub fn point_space() -> BranchedSpace {
    BranchedSpace {
        arcs: [("p".to_string(), (ri(0), ri(0)))].into_iter().collect(),
        idents: Vec::new(),
    }
}

/// The lower-branch collapse of the attached intervals.
pub fn dx_collapse() -> DiMap {
    let half = || {
        Expr::max2(
            Expr::var(1, 0),
            Expr::Aff(AffineForm::new(vec![ri(0)], rat(1, 2))),
        )
    };
    DiMap::Branched {
        stages: vec![BranchStage {
            arcs: [
                (
                    "b1".to_string(),
                    ArcMap {
                        target: "b1".into(),
                        expr: half(),
                    },
                ),
                (
                    "b2".to_string(),
                    ArcMap {
                        target: "b2".into(),
                        expr: half(),
                    },
                ),
            ]
            .into_iter()
            .collect(),
        }],
    }
}

pub fn dx_to_point() -> DiMap {
    let zero = || ArcMap {
        target: "p".into(),
        expr: Expr::konst(1, ri(0)),
    };
    DiMap::Branched {
        stages: vec![BranchStage {
            arcs: [("b1".to_string(), zero()), ("b2".to_string(), zero())]
                .into_iter()
                .collect(),
        }],
    }
}

pub fn point_to_dx() -> DiMap {
    DiMap::Branched {
        stages: vec![BranchStage {
            arcs: [(
                "p".to_string(),
                ArcMap {
                    target: "b1".into(),
                    expr: Expr::konst(1, rat(1, 2)),
                },
            )]
            .into_iter()
            .collect(),
        }],
    }
}

/// The boundary of the unit square as a segment complex.
pub fn boundary_segments() -> SegSet {
    SegSet::new(
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
            Seg {
                from: pt2(ri(0), ri(0)),
                to: pt2(ri(0), ri(1)),
            },
            Seg {
                from: pt2(ri(0), ri(1)),
                to: pt2(ri(1), ri(1)),
            },
        ],
    )
    .expect("boundary segments are monotone")
}

/// The swiss-flag skeleton as a segment complex.
pub fn swiss_segments() -> SegSet {
    let seg = |a: (Rat, Rat), b: (Rat, Rat)| Seg {
        from: pt2(a.0, a.1),
        to: pt2(b.0, b.1),
    };
    SegSet::new(
        2,
        vec![
            seg((ri(0), ri(0)), (rat(2, 5), rat(2, 5))),
            seg((rat(1, 5), rat(1, 5)), (rat(1, 5), rat(3, 5))),
            seg((rat(1, 5), rat(3, 5)), (rat(2, 5), rat(4, 5))),
            seg((rat(2, 5), rat(4, 5)), (rat(4, 5), rat(4, 5))),
            seg((rat(1, 5), rat(1, 5)), (rat(3, 5), rat(1, 5))),
            seg((rat(3, 5), rat(1, 5)), (rat(4, 5), rat(2, 5))),
            seg((rat(4, 5), rat(2, 5)), (rat(4, 5), rat(4, 5))),
            seg((rat(3, 5), rat(3, 5)), (ri(1), ri(1))),
        ],
    )
    .expect("skeleton segments are monotone")
}

fn marks(pairs: &[(&str, Location)]) -> BTreeMap<String, Location> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The directed interval is contractible (empty context): f collapses to the
/// endpoint 1, g includes the point at 1, and H(x,t) = x + t(1-x).
pub fn cert_interval_point() -> Certificate {
    let b = MarkedGeom::unmarked(Geometry::Region(RectRegion::unit_cube(1)));
    let point = RectRegion::solid(
        crate::geom::AxisBox::new(Point::new(vec![ri(1)]), Point::new(vec![ri(1)])).unwrap(),
    );
    let c = MarkedGeom::unmarked(Geometry::Region(point));
    let const1 = DiMap::single(1, vec![Expr::konst(1, ri(1))]);
    Certificate {
        context: Vec::new(),
        space_b: b,
        space_c: c,
        map_f: const1.clone(),
        map_g: const1.clone(),
        chain_bc: Chain {
            nodes: vec![DiMap::identity(1), const1],
            dirs: vec![Direction::Fwd],
        },
        chain_cb: CbChain::Explicit(Chain {
            nodes: vec![DiMap::identity(1)],
            dirs: Vec::new(),
        }),
    }
}

/// The attached intervals are contractible (empty context), through the
/// midpoint collapse h and two interpolations.
pub fn cert_dx_point() -> Certificate {
    let f = dx_to_point();
    let g = point_to_dx();
    let gf = g.after(&f);
    Certificate {
        context: Vec::new(),
        space_b: MarkedGeom::unmarked(Geometry::Branched(dx_space())),
        space_c: MarkedGeom::unmarked(Geometry::Branched(point_space())),
        map_f: f,
        map_g: g,
        chain_bc: Chain {
            nodes: vec![DiMap::branched_identity(), dx_collapse(), gf],
            dirs: vec![Direction::Fwd, Direction::Bwd],
        },
        chain_cb: CbChain::Explicit(Chain {
            nodes: vec![DiMap::branched_identity()],
            dirs: Vec::new(),
        }),
    }
}

/// The square is equivalent to the interval rel its corners, via max and
/// the diagonal.
pub fn cert_square_interval() -> Certificate {
    let f = max_collapse();
    let g = diagonal();
    let gf = g.after(&f);
    Certificate {
        context: names(&["a", "b"]),
        space_b: MarkedGeom {
            geometry: Geometry::Region(RectRegion::unit_cube(2)),
            marks: marks(&[
                ("a", Location::Ambient(pt2(ri(0), ri(0)))),
                ("b", Location::Ambient(pt2(ri(1), ri(1)))),
            ]),
        },
        space_c: MarkedGeom {
            geometry: Geometry::Region(RectRegion::unit_cube(1)),
            marks: marks(&[
                ("a", Location::Ambient(Point::new(vec![ri(0)]))),
                ("b", Location::Ambient(Point::new(vec![ri(1)]))),
            ]),
        },
        map_f: f,
        map_g: g,
        chain_bc: Chain {
            nodes: vec![DiMap::identity(2), gf],
            dirs: vec![Direction::Fwd],
        },
        chain_cb: CbChain::Explicit(Chain {
            nodes: vec![DiMap::identity(1)],
            dirs: Vec::new(),
        }),
    }
}

/// The square with its middle removed is equivalent to its boundary rel the
/// two extreme corners.
pub fn cert_square_removed_boundary() -> Certificate {
    let corner_marks = marks(&[
        ("a", Location::Ambient(pt2(ri(0), ri(0)))),
        ("b", Location::Ambient(pt2(ri(1), ri(1)))),
    ]);
    let f = square_removed_collapse();
    let h = ambient(vec![square_stage(&f_expand())], 2, 2);
    Certificate {
        context: names(&["a", "b"]),
        space_b: MarkedGeom {
            geometry: Geometry::Region(crate::models::square_removed_region()),
            marks: corner_marks.clone(),
        },
        space_c: MarkedGeom {
            geometry: Geometry::Segments(boundary_segments()),
            marks: corner_marks,
        },
        map_f: f.clone(),
        map_g: DiMap::identity(2),
        chain_bc: Chain {
            nodes: vec![DiMap::identity(2), h, f],
            dirs: vec![Direction::Fwd, Direction::Bwd],
        },
        chain_cb: CbChain::RestrictBc,
    }
}

/// The swiss flag is equivalent to its one-dimensional skeleton rel the four
/// labeled points.
pub fn cert_swiss_flag() -> Certificate {
    let mk = marks(&[
        ("a", Location::Ambient(pt2(ri(0), ri(0)))),
        ("b", Location::Ambient(pt2(ri(1), ri(1)))),
        ("c", Location::Ambient(pt2(rat(2, 5), rat(2, 5)))),
        ("d", Location::Ambient(pt2(rat(3, 5), rat(3, 5)))),
    ]);
    let n1 = ambient(vec![swiss_f1()], 2, 2);
    let n2 = ambient(vec![swiss_f1(), swiss_f2()], 2, 2);
    let n3 = ambient(vec![swiss_f1(), swiss_f2(), swiss_f3()], 2, 2);
    let n4 = swiss_collapse();
    Certificate {
        context: names(&["a", "b", "c", "d"]),
        space_b: MarkedGeom {
            geometry: Geometry::Region(crate::models::swiss_region()),
            marks: mk.clone(),
        },
        space_c: MarkedGeom {
            geometry: Geometry::Segments(swiss_segments()),
            marks: mk,
        },
        map_f: n4.clone(),
        map_g: DiMap::identity(2),
        chain_bc: Chain {
            nodes: vec![DiMap::identity(2), n1, n2, n3, n4],
            dirs: vec![
                Direction::Fwd,
                Direction::Bwd,
                Direction::Fwd,
                Direction::Bwd,
            ],
        },
        chain_cb: CbChain::RestrictBc,
    }
}

/// Named map registry for the file formats and the command line.
pub fn preset_map(name: &str) -> Option<DiMap> {
    Some(match name {
        "interval_expand" => ambient(
            vec![PlStage {
                dim_in: 1,
                coords: vec![f_expand()],
            }],
            1,
            1,
        ),
        "interval_squash" => ambient(
            vec![PlStage {
                dim_in: 1,
                coords: vec![f_squash()],
            }],
            1,
            1,
        ),
        "square_expand" => ambient(vec![square_stage(&f_expand())], 2, 2),
        "square_collapse" => square_removed_collapse(),
        "swiss_f1" => ambient(vec![swiss_f1()], 2, 2),
        "swiss_f2" => ambient(vec![swiss_f2()], 2, 2),
        "swiss_f3" => ambient(vec![swiss_f3()], 2, 2),
        "swiss_f4" => ambient(vec![swiss_f4()], 2, 2),
        "swiss_collapse" => swiss_collapse(),
        "max" => max_collapse(),
        "diagonal" => diagonal(),
        "identity1" => DiMap::identity(1),
        "identity2" => DiMap::identity(2),
        "dx_collapse" => dx_collapse(),
        "dx_to_point" => dx_to_point(),
        "point_to_dx" => point_to_dx(),
        _ => return None,
    })
}

/// Named certificate registry.
pub fn preset_certificate(name: &str) -> Option<Certificate> {
    Some(match name {
        "di-point" => cert_interval_point(),
        "dx-point" => cert_dx_point(),
        "dii-di-corners" => cert_square_interval(),
        "square-removed-boundary" => cert_square_removed_boundary(),
        "swiss-flag" => cert_swiss_flag(),
        _ => return None,
    })
}

pub fn preset_map_names() -> Vec<&'static str> {
    vec![
        "interval_expand",
        "interval_squash",
        "square_expand",
        "square_collapse",
        "swiss_f1",
        "swiss_f2",
        "swiss_f3",
        "swiss_f4",
        "swiss_collapse",
        "max",
        "diagonal",
        "identity1",
        "identity2",
        "dx_collapse",
        "dx_to_point",
        "point_to_dx",
    ]
}

pub fn preset_certificate_names() -> Vec<&'static str> {
    vec![
        "di-point",
        "dx-point",
        "dii-di-corners",
        "square-removed-boundary",
        "swiss-flag",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plmap::Location;

    #[test]
    fn preset_values_match_the_formulas() {
        let f1 = preset_map("interval_expand").unwrap();
        assert_eq!(
            f1.eval_ambient(&Point::new(vec![rat(2, 3)])).unwrap(),
            Point::new(vec![ri(1)])
        );
        // (F2 . F1)(1/3) = 0
        let f = {
            let e = preset_map("interval_expand").unwrap();
            let s = preset_map("interval_squash").unwrap();
            s.after(&e)
        };
        assert_eq!(
            f.eval_ambient(&Point::new(vec![rat(1, 3)])).unwrap(),
            Point::new(vec![ri(0)])
        );
        // max at (3/10, 7/10)
        let m = max_collapse();
        assert_eq!(
            m.eval_ambient(&pt2(rat(3, 10), rat(7, 10))).unwrap(),
            Point::new(vec![rat(7, 10)])
        );
        // swiss f4 at (1/2, 1/5) stretches to (2/5, 1/5)
        let f4 = preset_map("swiss_f4").unwrap();
        assert_eq!(
            f4.eval_ambient(&pt2(rat(1, 2), rat(1, 5))).unwrap(),
            pt2(rat(2, 5), rat(1, 5))
        );
        // the lower-branch collapse of the attached intervals
        let h = dx_collapse();
        let img = h
            .eval_branched(&ArcPoint {
                arc: "b1".into(),
                at: rat(1, 4),
            })
            .unwrap();
        assert_eq!(img.at, rat(1, 2));
    }

    #[test]
    fn swiss_collapse_hits_the_skeleton() {
        let f = swiss_collapse();
        let segs = swiss_segments();
        // A few spot images.
        for (p, want) in [
            (pt2(rat(1, 10), rat(9, 10)), pt2(rat(2, 5), rat(4, 5))),
            (pt2(rat(1, 2), rat(1, 10)), pt2(rat(2, 5), rat(1, 5))),
            (pt2(rat(1, 10), rat(1, 20)), pt2(rat(1, 10), rat(1, 10))),
        ] {
            let got = f.eval_ambient(&p).unwrap();
            assert_eq!(got, want, "image of {}", p);
            assert!(segs.contains_point(&got));
        }
        // The four labeled points stay put.
        for m in [
            pt2(ri(0), ri(0)),
            pt2(ri(1), ri(1)),
            pt2(rat(2, 5), rat(2, 5)),
            pt2(rat(3, 5), rat(3, 5)),
        ] {
            assert_eq!(f.eval_ambient(&m).unwrap(), m);
        }
    }

    #[test]
    fn interpolation_formula() {
        // H(x, t) = x + t(1 - x) between the identity and the constant 1.
        let h = crate::cert::linear_interpolation(
            DiMap::identity(1),
            DiMap::single(1, vec![Expr::konst(1, ri(1))]),
        );
        let v = h
            .eval_ambient(&Point::new(vec![rat(1, 4)]), &rat(1, 3))
            .unwrap();
        assert_eq!(v, Point::new(vec![rat(1, 4) + rat(1, 3) * rat(3, 4)]));
    }

    #[test]
    fn dx_certificate_marks_are_sane() {
        let cert = cert_dx_point();
        assert!(cert.context.is_empty());
        let Geometry::Branched(space) = &cert.space_b.geometry else {
            panic!()
        };
        assert!(space.contains(&ArcPoint {
            arc: "b1".into(),
            at: rat(1, 2)
        }));
        let _ = Location::Arc(ArcPoint {
            arc: "b1".into(),
            at: ri(0),
        });
    }
}
