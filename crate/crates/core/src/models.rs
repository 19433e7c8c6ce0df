//! Ready-made models: the swiss flag, the square-removed square, the glued
//! counterexample spaces, the staircase pushout chain and the non-discrete-
//! context gluing, all at their canonical grid scales.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{
    build_grid_complex, discrete_context, mark_context, standard_space, Cell2, ContextedComplex,
    DiComplex, Edge, EdgeKind, StandardSpace, Vertex,
};
use crate::fundcat::CombMap;
use crate::geom::{AxisBox, Point, RectRegion};
use crate::glue::{pushout_along_map, pushout_identify, GlueResult, GlueSpec, PartRef, PushoutResult};
use crate::rat::{rat, ri, Rat};

fn pt2(x: Rat, y: Rat) -> Point {
    Point::new(vec![x, y])
}

fn bx(x0: Rat, y0: Rat, x1: Rat, y1: Rat) -> AxisBox {
    AxisBox::new(pt2(x0, y0), pt2(x1, y1)).unwrap()
}

/// Evenly spaced grid lines 0, 1/k, ..., 1.
pub fn unit_lines(k: i64) -> Vec<Rat> {
    (0..=k).map(|i| Rat::new(i, k)).collect()
}

/// The unit square with the open middle-third square removed.
pub fn square_removed_region() -> RectRegion {
    RectRegion::new(
        bx(ri(0), ri(0), ri(1), ri(1)),
        vec![bx(rat(1, 3), rat(1, 3), rat(2, 3), rat(2, 3))],
    )
    .unwrap()
}

/// The boundary of the unit square, as a region (the interior removed).
pub fn boundary_region() -> RectRegion {
    RectRegion::new(
        bx(ri(0), ri(0), ri(1), ri(1)),
        vec![bx(ri(0), ri(0), ri(1), ri(1))],
    )
    .unwrap()
}

/// The swiss flag: unit square minus the open plus-shaped cross, given as
/// the five boxes of the cross.
pub fn swiss_region() -> RectRegion {
    RectRegion::new(
        bx(ri(0), ri(0), ri(1), ri(1)),
        vec![
            bx(rat(2, 5), rat(2, 5), rat(3, 5), rat(3, 5)),
            bx(rat(1, 5), rat(2, 5), rat(2, 5), rat(3, 5)),
            bx(rat(3, 5), rat(2, 5), rat(4, 5), rat(3, 5)),
            bx(rat(2, 5), rat(1, 5), rat(3, 5), rat(2, 5)),
            bx(rat(2, 5), rat(3, 5), rat(3, 5), rat(4, 5)),
        ],
    )
    .unwrap()
}

pub fn square_removed_grid() -> DiComplex {
    build_grid_complex(
        &square_removed_region(),
        &[unit_lines(3), unit_lines(3)],
        false,
    )
    .expect("thirds grid covers all faces")
}

pub fn swiss_grid() -> DiComplex {
    build_grid_complex(&swiss_region(), &[unit_lines(5), unit_lines(5)], false)
        .expect("fifths grid covers all faces")
}

/// The swiss flag marked with a, b, c, d.
pub fn swiss_marked() -> ContextedComplex {
    let marking: BTreeMap<String, String> = [
        ("a", "v0_0"),
        ("b", "v5_5"),
        ("c", "v2_2"),
        ("d", "v3_3"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect();
    mark_context(swiss_grid(), discrete_context(&["a", "b", "c", "d"]), marking)
        .expect("marks are grid vertices")
}

/// The one-dimensional subspace of the swiss flag: the two diagonal tails
/// and the hexagonal frame around the cross, with whiskers to c and d.
pub fn swiss_skeleton() -> DiComplex {
    let v = |id: &str, x: Rat, y: Rat| Vertex {
        id: id.to_string(),
        coords: Some(pt2(x, y)),
    };
    let e = |id: &str, s: &str, d: &str| Edge {
        id: id.to_string(),
        src: s.to_string(),
        dst: d.to_string(),
        kind: EdgeKind::Directed,
    };
    DiComplex::new(
        vec![
            v("a", ri(0), ri(0)),
            v("h1", rat(1, 5), rat(1, 5)),
            v("c", rat(2, 5), rat(2, 5)),
            v("h2", rat(1, 5), rat(3, 5)),
            v("h3", rat(2, 5), rat(4, 5)),
            v("h4", rat(4, 5), rat(4, 5)),
            v("h5", rat(4, 5), rat(2, 5)),
            v("h6", rat(3, 5), rat(1, 5)),
            v("d", rat(3, 5), rat(3, 5)),
            v("b", ri(1), ri(1)),
        ],
        vec![
            e("e_a", "a", "h1"),
            e("e_c", "h1", "c"),
            e("e_left", "h1", "h2"),
            e("e_bottom", "h1", "h6"),
            e("e_slant_l", "h2", "h3"),
            e("e_slant_r", "h6", "h5"),
            e("e_top", "h3", "h4"),
            e("e_right", "h5", "h4"),
            e("e_d", "d", "h4"),
            e("e_b", "h4", "b"),
        ],
        Vec::new(),
    )
}

/// The swiss skeleton marked with the same four points.
pub fn swiss_skeleton_marked() -> ContextedComplex {
    let marking: BTreeMap<String, String> = [("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    mark_context(
        swiss_skeleton(),
        discrete_context(&["a", "b", "c", "d"]),
        marking,
    )
    .expect("marks exist")
}

/// The collapse `(x, y) -> max(x, y)` as a combinatorial map from the k x k
/// grid square onto the k-segment interval.
pub fn max_comb_map(k: u32) -> CombMap {
    let k = k as usize;
    let mut vertex_map = BTreeMap::new();
    let mut edge_map = BTreeMap::new();
    for i in 0..=k {
        for j in 0..=k {
            vertex_map.insert(format!("v{}_{}", i, j), format!("v{}", i.max(j)));
            if i < k {
                let m = i.max(j);
                let m2 = (i + 1).max(j);
                edge_map.insert(
                    format!("h{}_{}", i, j),
                    if m == m2 { Vec::new() } else { vec![format!("h{}", m)] },
                );
            }
            if j < k {
                let m = i.max(j);
                let m2 = i.max(j + 1);
                edge_map.insert(
                    format!("u{}_{}", i, j),
                    if m == m2 { Vec::new() } else { vec![format!("h{}", m)] },
                );
            }
        }
    }
    CombMap {
        vertex_map,
        edge_map,
    }
}

/// The glued counterexample of the introduction: two ordered circles hung
/// onto incomparable points of the square, then the square collapsed onto
/// the interval.
pub struct Section1 {
    /// B: the square with the two ordered circles attached.
    pub b_space: DiComplex,
    /// C: B with its square part collapsed along max onto the interval.
    pub c_space: DiComplex,
    pub induced: CombMap,
    /// Initial point of the first circle, final point of the second (names
    /// valid in `b_space`; map through `induced` for `c_space`).
    pub a1: String,
    pub b2: String,
    /// Attachment points x = (0, 1/4) and y = (3/4, 0) in `b_space`.
    pub x: String,
    pub y: String,
}

pub fn section1() -> Section1 {
    let dii = standard_space(StandardSpace::DIIGrid(4));
    let do1 = standard_space(StandardSpace::DO);
    let do2 = standard_space(StandardSpace::DO);
    // x = (0, 1/4) = v0_1, y = (3/4, 0) = v3_0.
    let spec = GlueSpec {
        parts: vec![dii.clone(), do1, do2],
        identify_vertices: vec![
            (PartRef::new(1, "b"), PartRef::new(0, "v0_1")),
            (PartRef::new(2, "a"), PartRef::new(0, "v3_0")),
        ],
        identify_edges: Vec::new(),
    };
    let glued = pushout_identify(&spec).expect("section-1 glue");
    let b_space = glued.complex.clone();
    let include = inclusion_of_part(&dii, &glued, 0);
    let di = standard_space(StandardSpace::DIGrid(4));
    let f = max_comb_map(4);
    let pushed = pushout_along_map(&b_space, &dii, &include, &di, &f).expect("section-1 pushout");
    Section1 {
        a1: glued.vertex_map[&(1, "a".to_string())].clone(),
        b2: glued.vertex_map[&(2, "b".to_string())].clone(),
        x: glued.vertex_map[&(0, "v0_1".to_string())].clone(),
        y: glued.vertex_map[&(0, "v3_0".to_string())].clone(),
        b_space,
        c_space: pushed.complex,
        induced: pushed.induced,
    }
}

/// The combinatorial inclusion of one glue part into the glued complex.
pub fn inclusion_of_part(part: &DiComplex, glued: &GlueResult, index: usize) -> CombMap {
    CombMap {
        vertex_map: part
            .vertices
            .iter()
            .map(|v| {
                (
                    v.id.clone(),
                    glued.vertex_map[&(index, v.id.clone())].clone(),
                )
            })
            .collect(),
        edge_map: part
            .edges
            .iter()
            .map(|e| {
                (
                    e.id.clone(),
                    vec![glued.edge_map[&(index, e.id.clone())].clone()],
                )
            })
            .collect(),
    }
}

/// The non-discrete-context model: a triangulated square glued along its
/// anti-diagonal to the middle row of a trivially ordered band of columns.
pub struct ZModel {
    pub z: DiComplex,
    pub x_space: DiComplex,
    /// Inclusion of the square into Z.
    pub include: CombMap,
    pub n: usize,
}

impl ZModel {
    /// Bottom endpoint of column s.
    pub fn p0(&self, s: usize) -> String {
        format!("p1:y{}_0", s)
    }

    /// Top endpoint of column s.
    pub fn p1(&self, s: usize) -> String {
        format!("p1:y{}_2", s)
    }
}

pub fn z_model(n: usize) -> ZModel {
    assert!(n >= 2);
    let x_space = build_grid_complex(
        &RectRegion::unit_cube(2),
        &[unit_lines(n as i64), unit_lines(n as i64)],
        true,
    )
    .expect("triangulated grid");
    // Y: n+1 columns of two vertical directed edges; rows joined by
    // undirected edges (the trivially ordered direction).
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for s in 0..=n {
        for r in 0..3 {
            vertices.push(Vertex {
                id: format!("y{}_{}", s, r),
                coords: None,
            });
        }
        for r in 0..2 {
            edges.push(Edge {
                id: format!("yv{}_{}", s, r),
                src: format!("y{}_{}", s, r),
                dst: format!("y{}_{}", s, r + 1),
                kind: EdgeKind::Directed,
            });
        }
    }
    for s in 0..n {
        for r in 0..3 {
            edges.push(Edge {
                id: format!("yh{}_{}", s, r),
                src: format!("y{}_{}", s, r),
                dst: format!("y{}_{}", s + 1, r),
                kind: EdgeKind::Undirected,
            });
        }
    }
    let y_space = DiComplex::new(vertices, edges, Vec::new());
    let spec = GlueSpec {
        parts: vec![x_space.clone(), y_space],
        identify_vertices: (0..=n)
            .map(|s| {
                (
                    PartRef::new(0, &format!("v{}_{}", s, n - s)),
                    PartRef::new(1, &format!("y{}_1", s)),
                )
            })
            .collect(),
        identify_edges: Vec::new(),
    };
    let glued = pushout_identify(&spec).expect("z glue");
    let include = inclusion_of_part(&x_space, &glued, 0);
    ZModel {
        z: glued.complex,
        x_space,
        include,
        n,
    }
}

/// Staircase route from (i0, j0) up to row j1 then right to column i1, in
/// the grid id scheme.
fn staircase(i0: usize, j0: usize, i1: usize, j1: usize) -> Vec<String> {
    let mut route = Vec::new();
    for j in j0..j1 {
        route.push(format!("u{}_{}", i0, j));
    }
    for i in i0..i1 {
        route.push(format!("h{}_{}", i, j1));
    }
    route
}

/// The collapse endomorphism of the triangulated n-grid used to trigger the
/// non-discrete-context phenomenon: columns a..b fold right onto column b,
/// rows n-b..n-a fold up onto row n-a, so the anti-diagonal points of the
/// folded columns merge.
pub fn z_collapse(n: usize, a: usize, b: usize) -> CombMap {
    assert!(a < b && b <= n);
    let col = move |i: usize| if i < a { i } else if i <= b { b } else { i };
    let row_lo = n - b;
    let row_hi = n - a;
    let row = move |j: usize| {
        if j < row_lo {
            j
        } else if j <= row_hi {
            row_hi
        } else {
            j
        }
    };
    let mut vertex_map = BTreeMap::new();
    let mut edge_map = BTreeMap::new();
    for i in 0..=n {
        for j in 0..=n {
            vertex_map.insert(format!("v{}_{}", i, j), format!("v{}_{}", col(i), row(j)));
            if i < n {
                edge_map.insert(
                    format!("h{}_{}", i, j),
                    staircase(col(i), row(j), col(i + 1), row(j)),
                );
            }
            if j < n {
                edge_map.insert(
                    format!("u{}_{}", i, j),
                    staircase(col(i), row(j), col(i), row(j + 1)),
                );
            }
            if i < n && j < n {
                let (ci, cj, ci1, cj1) = (col(i), row(j), col(i + 1), row(j + 1));
                let route = if ci1 == ci + 1 && cj1 == cj + 1 {
                    vec![format!("d{}_{}", ci, cj)]
                } else {
                    staircase(ci, cj, ci1, cj1)
                };
                edge_map.insert(format!("d{}_{}", i, j), route);
            }
        }
    }
    CombMap {
        vertex_map,
        edge_map,
    }
}

/// Z pushed along the collapse: Z' where the folded anti-diagonal points
/// coincide, creating a dipath from column a's bottom to column b's top.
pub fn z_prime(zm: &ZModel, a: usize, b: usize) -> PushoutResult {
    let f = z_collapse(zm.n, a, b);
    pushout_along_map(&zm.z, &zm.x_space, &zm.include, &zm.x_space, &f)
        .expect("z-prime pushout")
}

/// Grid lines for the staircase chain: fifths plus the midpoint.
pub fn staircase_lines() -> Vec<Rat> {
    let mut l = unit_lines(5);
    l.push(rat(1, 2));
    l.sort();
    l
}

// Index maps on `staircase_lines` (0, 1/5, 2/5, 1/2, 3/5, 4/5, 1).

/// x-collapse of B -> B': 0,1/5 -> 0; 2/5,1/2 -> 1/2; rest fixed.
fn b_col(i: usize) -> usize {
    match i {
        0 | 1 => 0,
        2 | 3 => 3,
        other => other,
    }
}

/// x-collapse of C -> C': 1/2,3/5 -> 1/2; 4/5,1 -> 1; rest fixed.
fn c_col(i: usize) -> usize {
    match i {
        3 | 4 => 3,
        5 | 6 => 6,
        other => other,
    }
}

/// y-collapse shared by both staircase maps: rows up to 2/5 -> 0, the
/// midpoint row fixed, rows from 3/5 -> 1.
fn stair_row(j: usize) -> usize {
    match j {
        0 | 1 | 2 => 0,
        3 => 3,
        _ => 6,
    }
}

fn product_comb_map(
    n: usize,
    col: impl Fn(usize) -> usize,
    row: impl Fn(usize) -> usize,
) -> CombMap {
    let mut vertex_map = BTreeMap::new();
    let mut edge_map = BTreeMap::new();
    for i in 0..=n {
        for j in 0..=n {
            vertex_map.insert(format!("v{}_{}", i, j), format!("v{}_{}", col(i), row(j)));
            if i < n {
                edge_map.insert(
                    format!("h{}_{}", i, j),
                    staircase(col(i), row(j), col(i + 1), row(j)),
                );
            }
            if j < n {
                edge_map.insert(
                    format!("u{}_{}", i, j),
                    staircase(col(i), row(j), col(i), row(j + 1)),
                );
            }
        }
    }
    CombMap {
        vertex_map,
        edge_map,
    }
}

/// Restricts a grid-scheme map to the vertices/edges present in `src`.
fn restrict_to(src: &DiComplex, f: CombMap) -> CombMap {
    CombMap {
        vertex_map: f
            .vertex_map
            .into_iter()
            .filter(|(k, _)| src.has_vertex(k))
            .collect(),
        edge_map: f
            .edge_map
            .into_iter()
            .filter(|(k, _)| src.edge(k).is_some())
            .collect(),
    }
}

/// B atop C: parts [top, bottom] glued along the shared interface row
/// (vertices and edges, where present on both sides).
fn stack(top: &DiComplex, bottom: &DiComplex, m: usize) -> GlueResult {
    let mut identify_vertices = Vec::new();
    let mut identify_edges = Vec::new();
    for i in 0..=m {
        identify_vertices.push((
            PartRef::new(0, &format!("v{}_0", i)),
            PartRef::new(1, &format!("v{}_{}", i, m)),
        ));
        if i < m {
            let te = format!("h{}_0", i);
            let be = format!("h{}_{}", i, m);
            if top.edge(&te).is_some() && bottom.edge(&be).is_some() {
                identify_edges.push((PartRef::new(0, &te), PartRef::new(1, &be)));
            }
        }
    }
    pushout_identify(&GlueSpec {
        parts: vec![top.clone(), bottom.clone()],
        identify_vertices,
        identify_edges,
    })
    .expect("interface stack")
}

/// The staircase gluing chain: D (one box-removed square atop another),
/// pushed to E by collapsing the upper story, then the attached two-staircase
/// space F, its footnote quotient, and the triangulated comparison square G.
pub struct Section5 {
    pub b_space: DiComplex,
    pub c_space: DiComplex,
    pub d_space: DiComplex,
    pub e_space: DiComplex,
    pub f_space: DiComplex,
    /// F with the footnote's interface segments collapsed.
    pub f_footnote: DiComplex,
    pub g_space: DiComplex,
    pub marks_d: BTreeMap<String, String>,
    pub marks_e: BTreeMap<String, String>,
    pub marks_f: BTreeMap<String, String>,
    pub marks_f_footnote: BTreeMap<String, String>,
    pub marks_g: BTreeMap<String, String>,
}

fn interface_marks(glued: &GlueResult) -> BTreeMap<String, String> {
    // a, b, c at x = 0, 1/2, 1 on the shared interface row.
    [("a", 0usize), ("b", 3), ("c", 6)]
        .into_iter()
        .map(|(name, i)| {
            (
                name.to_string(),
                glued.vertex_map[&(0usize, format!("v{}_0", i))].clone(),
            )
        })
        .collect()
}

pub fn section5() -> Section5 {
    let lines = staircase_lines();
    let m = lines.len() - 1;
    let grid = |region: &RectRegion| {
        build_grid_complex(region, &[lines.clone(), lines.clone()], false).expect("staircase grid")
    };
    let unit = bx(ri(0), ri(0), ri(1), ri(1));
    let b_space = grid(
        &RectRegion::new(unit.clone(), vec![bx(rat(1, 5), rat(2, 5), rat(2, 5), rat(3, 5))])
            .unwrap(),
    );
    let c_space = grid(
        &RectRegion::new(unit.clone(), vec![bx(rat(3, 5), rat(2, 5), rat(4, 5), rat(3, 5))])
            .unwrap(),
    );
    let b_prime = grid(&RectRegion::new(unit.clone(), vec![bx(ri(0), ri(0), rat(1, 2), ri(1))]).unwrap());
    let c_prime = grid(&RectRegion::new(unit, vec![bx(rat(1, 2), ri(0), ri(1), ri(1))]).unwrap());

    let d_glued = stack(&b_space, &c_space, m);
    let d_space = d_glued.complex.clone();

    let include_b = inclusion_of_part(&b_space, &d_glued, 0);
    let f_map = restrict_to(&b_space, product_comb_map(m, b_col, stair_row));
    let e_pushed = pushout_along_map(&d_space, &b_space, &include_b, &b_prime, &f_map)
        .expect("staircase pushout to E");
    let e_space = e_pushed.complex.clone();

    // The second pushout's collapse makes the C-leg non-injective (the
    // footnote identifications), so F is built as the attached space and the
    // footnote quotient is applied separately.
    let _ = c_col; // documented mirror of b_col; used by the quotient below
    let f_glued = stack(&b_prime, &c_prime, m);
    let f_space = f_glued.complex.clone();
    // Interface segments [0,1/5], [2/5,3/5], [4/5,1]: grid edges 0; 2,3; 5.
    let contract: Vec<String> = [0usize, 2, 3, 5]
        .into_iter()
        .map(|i| f_glued.edge_map[&(0usize, format!("h{}_0", i))].clone())
        .collect();
    let (f_footnote, f_renames) =
        crate::glue::contract_edges(&f_space, &contract).expect("footnote contraction");

    // G: the 2x2 square with its main diagonal, marked along the diagonal.
    let g_space = {
        let base = build_grid_complex(
            &RectRegion::unit_cube(2),
            &[unit_lines(2), unit_lines(2)],
            false,
        )
        .unwrap();
        let mut edges = base.edges.clone();
        let mut cells = base.cells.clone();
        for (i, j) in [(0usize, 0usize), (1, 1)] {
            let d = format!("d{}_{}", i, j);
            edges.push(Edge {
                id: d.clone(),
                src: format!("v{}_{}", i, j),
                dst: format!("v{}_{}", i + 1, j + 1),
                kind: EdgeKind::Directed,
            });
            cells.push(Cell2 {
                id: format!("t{}_{}a", i, j),
                path_a: vec![d.clone()],
                path_b: vec![format!("h{}_{}", i, j), format!("u{}_{}", i + 1, j)],
            });
            cells.push(Cell2 {
                id: format!("t{}_{}b", i, j),
                path_a: vec![d],
                path_b: vec![format!("u{}_{}", i, j), format!("h{}_{}", i, j + 1)],
            });
        }
        DiComplex::new(base.vertices.clone(), edges, cells)
    };

    let marks_d = interface_marks(&d_glued);
    let marks_e: BTreeMap<String, String> = marks_d
        .iter()
        .map(|(k, v)| (k.clone(), e_pushed.induced.vertex_map[v].clone()))
        .collect();
    let marks_f = interface_marks(&f_glued);
    let marks_f_footnote: BTreeMap<String, String> = marks_f
        .iter()
        .map(|(k, v)| (k.clone(), f_renames[v].clone()))
        .collect();
    let marks_g: BTreeMap<String, String> = [("a", "v0_0"), ("b", "v1_1"), ("c", "v2_2")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();

    Section5 {
        b_space,
        c_space,
        d_space,
        e_space,
        f_space,
        f_footnote,
        g_space,
        marks_d,
        marks_e,
        marks_f,
        marks_f_footnote,
        marks_g,
    }
}

/// The mirrored staircase chain: C-style story atop a B-style story,
/// compared against the slanted band G'.
pub struct Section5Mirror {
    pub d_space: DiComplex,
    pub f_space: DiComplex,
    pub g_space: DiComplex,
    pub marks_d: BTreeMap<String, String>,
    pub marks_f: BTreeMap<String, String>,
    pub marks_g: BTreeMap<String, String>,
}

pub fn section5_mirror() -> Section5Mirror {
    let lines = staircase_lines();
    let m = lines.len() - 1;
    let grid = |region: &RectRegion| {
        build_grid_complex(region, &[lines.clone(), lines.clone()], false).expect("staircase grid")
    };
    let unit = bx(ri(0), ri(0), ri(1), ri(1));
    let b_space = grid(
        &RectRegion::new(unit.clone(), vec![bx(rat(1, 5), rat(2, 5), rat(2, 5), rat(3, 5))])
            .unwrap(),
    );
    let c_space = grid(
        &RectRegion::new(unit.clone(), vec![bx(rat(3, 5), rat(2, 5), rat(4, 5), rat(3, 5))])
            .unwrap(),
    );
    let b_prime = grid(&RectRegion::new(unit.clone(), vec![bx(ri(0), ri(0), rat(1, 2), ri(1))]).unwrap());
    let c_prime = grid(&RectRegion::new(unit, vec![bx(rat(1, 2), ri(0), ri(1), ri(1))]).unwrap());
    // D' = C atop B; F' = C' atop B'.
    let d_glued = stack(&c_space, &b_space, m);
    let f_glued = stack(&c_prime, &b_prime, m);
    // G': diagonal up to the mid row, along it, diagonal out of it.
    let g_space = {
        let v = |id: &str, x: Rat, y: Rat| Vertex {
            id: id.to_string(),
            coords: Some(pt2(x, y)),
        };
        let e = |id: &str, s: &str, d: &str| Edge {
            id: id.to_string(),
            src: s.to_string(),
            dst: d.to_string(),
            kind: EdgeKind::Directed,
        };
        DiComplex::new(
            vec![
                v("o", ri(0), ri(0)),
                v("a", ri(0), rat(1, 2)),
                v("b", rat(1, 2), rat(1, 2)),
                v("c", ri(1), rat(1, 2)),
                v("t", ri(1), ri(1)),
            ],
            vec![
                e("diag0", "o", "b"),
                e("left", "o", "a"),
                e("mid0", "a", "b"),
                e("mid1", "b", "c"),
                e("diag1", "b", "t"),
                e("right", "c", "t"),
            ],
            vec![
                Cell2 {
                    id: "lower".to_string(),
                    path_a: vec!["diag0".to_string()],
                    path_b: vec!["left".to_string(), "mid0".to_string()],
                },
                Cell2 {
                    id: "upper".to_string(),
                    path_a: vec!["diag1".to_string()],
                    path_b: vec!["mid1".to_string(), "right".to_string()],
                },
            ],
        )
    };
    let marks_g: BTreeMap<String, String> = [("a", "a"), ("b", "b"), ("c", "c")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    Section5Mirror {
        marks_d: interface_marks(&d_glued),
        marks_f: interface_marks(&f_glued),
        d_space: d_glued.complex,
        f_space: f_glued.complex,
        g_space,
        marks_g,
    }
}
