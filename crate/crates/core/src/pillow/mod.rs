//! The pillow configuration of bidegree `(a, b)`: two triangulated `a x b`
//! grids ("top" and "bottom") glued along their common boundary cycle.
//!
//! Each vertex stands for a coordinate point of `P^g`, `g = 2ab + 1`, and each
//! triangle for the plane spanned by its three vertices.
//!
//! Grid positions are `(row, col)` with `row` in `0..=b` counted downwards and
//! `col` in `0..=a` counted rightwards. Labels:
//!
//! * boundary `1..=2a+2b`, clockwise from the top-left corner, so the corners
//!   are `1`, `a+1`, `a+b+1` and `2a+b+1`;
//! * top interior `2a+2b+1..=ab+a+b+1`, row-major;
//! * bottom interior `ab+a+b+2..=2ab+2`, row-major.
//!
//! Top cells are split by their rising diagonal, bottom cells by their falling
//! one.

mod export;
mod pairs;
mod stages;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use export::{face_adjacency_dot, line_intersection_dot, to_json, to_json_value};
pub use pairs::{
    count_disjoint_line_pairs, disjoint_pairs_from_degrees, formula_disjoint_pairs, PairCensus,
};
pub use stages::{
    planes_stage, planes_stage_of, quadric_stage, two_surface_stage, verify_stage, FaceShape,
    SpanDimensions, Stage,
    StageConfig, StageFace,
};
pub use verify::{
    face_adjacency, line_degrees, triangle_degrees, verify_sphere_triangulation,
    vertex_link_is_cycle, CHECK_DEGREE_CENSUS, CHECK_EULER, CHECK_FACES_CONNECTED,
    CHECK_LINES_IN_TWO_FACES, CHECK_LINKS_ARE_CYCLES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Top, Side::Bottom];

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineSide {
    Top,
    Bottom,
    Shared,
}

impl From<Side> for LineSide {
    fn from(side: Side) -> Self {
        match side {
            Side::Top => LineSide::Top,
            Side::Bottom => LineSide::Bottom,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    Boundary,
    Horizontal,
    Vertical,
    Diagonal,
}

/// A double line of the configuration. Endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: LineKind,
    pub side: LineSide,
}

impl Line {
    fn new(p: VertexId, q: VertexId, kind: LineKind, side: LineSide) -> Self {
        let (u, v) = if p < q { (p, q) } else { (q, p) };
        Line { u, v, kind, side }
    }

    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn meets(&self, other: &Line) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

/// Which half of a grid cell a triangle occupies: `Lower` contains the
/// cell's bottom edge, `Upper` its top edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Half {
    Lower,
    Upper,
}

/// A plane of the configuration. `row` is in `1..=b`, `col` in `1..=a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Triangle {
    pub vertices: [VertexId; 3],
    pub side: Side,
    pub row: u32,
    pub col: u32,
    pub half: Half,
}

impl Triangle {
    fn new(mut vertices: [VertexId; 3], side: Side, row: u32, col: u32, half: Half) -> Self {
        vertices.sort_unstable();
        Triangle {
            vertices,
            side,
            row,
            col,
            half,
        }
    }

    pub fn order_key(&self) -> (Side, u32, u32, Half) {
        (self.side, self.row, self.col, self.half)
    }

    /// The three sides as sorted endpoint pairs.
    pub fn edges(&self) -> [(VertexId, VertexId); 3] {
        let [x, y, z] = self.vertices;
        [(x, y), (x, z), (y, z)]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Node name used by the DOT exports, e.g. `top_r1_c2_lower`.
    pub fn node_name(&self) -> String {
        let half = match self.half {
            Half::Lower => "lower",
            Half::Upper => "upper",
        };
        format!("{}_r{}_c{}_{}", self.side.as_str(), self.row, self.col, half)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPos {
    pub side: Side,
    pub row: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PillowConfig {
    pub a: u32,
    pub b: u32,
    pub g: u32,
    /// Ascending.
    pub vertices: Vec<VertexId>,
    /// Sorted by endpoint pair.
    pub lines: Vec<Line>,
    /// Sorted by `(side, row, col, half)`.
    pub triangles: Vec<Triangle>,
    /// Boundary positions appear once per side with the same id.
    pub grid_map: BTreeMap<GridPos, VertexId>,
}

pub(crate) fn check_bidegree(a: u32, b: u32) -> Result<()> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParameter(format!(
            "bidegree ({a}, {b}): a and b must both be at least 2"
        )));
    }
    // 2ab + 2 vertex labels must fit in u32.
    match a.checked_mul(b).and_then(|ab| ab.checked_mul(2)).and_then(|x| x.checked_add(2)) {
        Some(_) => Ok(()),
        None => Err(Error::InvalidParameter(format!("bidegree ({a}, {b}) is too large"))),
    }
}

/// Label of grid position `(row, col)` on `side` for bidegree `(a, b)`.
pub fn label(a: u32, b: u32, side: Side, row: u32, col: u32) -> VertexId {
    debug_assert!(row <= b && col <= a);
    let id = if row == 0 {
        1 + col
    } else if col == a {
        a + 1 + row
    } else if row == b {
        a + b + 1 + (a - col)
    } else if col == 0 {
        2 * a + b + 1 + (b - row)
    } else {
        let base = match side {
            Side::Top => 2 * a + 2 * b + 1,
            Side::Bottom => a * b + a + b + 2,
        };
        base + (row - 1) * (a - 1) + (col - 1)
    };
    VertexId(id)
}

pub fn build_pillow(a: u32, b: u32) -> Result<PillowConfig> {
    check_bidegree(a, b)?;
    let g = 2 * a * b + 1;

    let mut grid_map = BTreeMap::new();
    for side in Side::BOTH {
        for row in 0..=b {
            for col in 0..=a {
                grid_map.insert(GridPos { side, row, col }, label(a, b, side, row, col));
            }
        }
    }
    let at = |side, row, col| label(a, b, side, row, col);

    // Boundary lines come up once from each side; keyed by endpoints so the
    // second occurrence is absorbed.
    let mut lines: BTreeMap<(VertexId, VertexId), Line> = BTreeMap::new();
    let mut add = |line: Line| {
        lines.entry(line.key()).or_insert(line);
    };
    for side in Side::BOTH {
        for row in 0..=b {
            for col in 0..a {
                let kind = if row == 0 || row == b {
                    LineKind::Boundary
                } else {
                    LineKind::Horizontal
                };
                add(segment(at(side, row, col), at(side, row, col + 1), kind, side));
            }
        }
        for row in 0..b {
            for col in 0..=a {
                let kind = if col == 0 || col == a {
                    LineKind::Boundary
                } else {
                    LineKind::Vertical
                };
                add(segment(at(side, row, col), at(side, row + 1, col), kind, side));
            }
        }
        for row in 0..b {
            for col in 0..a {
                let (p, q) = match side {
                    Side::Top => (at(side, row + 1, col), at(side, row, col + 1)),
                    Side::Bottom => (at(side, row, col), at(side, row + 1, col + 1)),
                };
                add(Line::new(p, q, LineKind::Diagonal, side.into()));
            }
        }
    }
    let lines: Vec<Line> = lines.into_values().collect();

    let mut triangles = Vec::with_capacity(4 * (a * b) as usize);
    for side in Side::BOTH {
        for row in 0..b {
            for col in 0..a {
                let nw = at(side, row, col);
                let ne = at(side, row, col + 1);
                let sw = at(side, row + 1, col);
                let se = at(side, row + 1, col + 1);
                let (upper, lower) = match side {
                    Side::Top => ([nw, ne, sw], [sw, se, ne]),
                    Side::Bottom => ([nw, ne, se], [nw, sw, se]),
                };
                triangles.push(Triangle::new(lower, side, row + 1, col + 1, Half::Lower));
                triangles.push(Triangle::new(upper, side, row + 1, col + 1, Half::Upper));
            }
        }
    }
    triangles.sort_by_key(Triangle::order_key);

    let vertices: BTreeSet<VertexId> = grid_map.values().copied().collect();

    Ok(PillowConfig {
        a,
        b,
        g,
        vertices: vertices.into_iter().collect(),
        lines,
        triangles,
        grid_map,
    })
}

fn segment(p: VertexId, q: VertexId, kind: LineKind, side: Side) -> Line {
    let side = match kind {
        LineKind::Boundary => LineSide::Shared,
        _ => side.into(),
    };
    Line::new(p, q, kind, side)
}

impl PillowConfig {
    /// Corner labels, clockwise from the top-left.
    pub fn corners(&self) -> [VertexId; 4] {
        let (a, b) = (self.a, self.b);
        [
            VertexId(1),
            VertexId(a + 1),
            VertexId(a + b + 1),
            VertexId(2 * a + b + 1),
        ]
    }

    pub fn is_corner(&self, v: VertexId) -> bool {
        self.corners().contains(&v)
    }

    pub fn boundary_vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=2 * (self.a + self.b)).map(VertexId)
    }

    pub fn interior_vertices(&self, side: Side) -> Vec<VertexId> {
        self.grid_map
            .iter()
            .filter(|(p, _)| {
                p.side == side && p.row > 0 && p.row < self.b && p.col > 0 && p.col < self.a
            })
            .map(|(_, &v)| v)
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.lines.len() as i64 + self.triangles.len() as i64
    }

    pub fn at(&self, side: Side, row: u32, col: u32) -> Option<VertexId> {
        self.grid_map.get(&GridPos { side, row, col }).copied()
    }

    /// The relabeling `v -> w` of vertices that carries this configuration onto
    /// the one of bidegree `(b, a)` by transposing both grids.
    pub fn transpose_relabeling(&self) -> BTreeMap<VertexId, VertexId> {
        self.grid_map
            .iter()
            .map(|(p, &v)| (v, label(self.b, self.a, p.side, p.col, p.row)))
            .collect()
    }
}

/// A pillow of bidegree `(a, b)` with `c = gcd(a, b)` is a degeneration of
/// the `c`-uple embedding of the pillow of bidegree `(a/c, b/c)`, and the
/// hyperplane class of the general smoothing is `c` times a primitive class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CupleReduction {
    pub c: u32,
    pub reduced: (u32, u32),
    pub primitive_multiple: u32,
}

pub fn gcd(mut x: u32, mut y: u32) -> u32 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

pub fn cuple_reduction(a: u32, b: u32) -> Result<CupleReduction> {
    check_bidegree(a, b)?;
    let x = gcd(a, b);
    Ok(CupleReduction {
        c: x,
        reduced: (a / x, b / x),
        primitive_multiple: x,
    })
}
