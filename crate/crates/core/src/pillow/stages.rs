//! Intermediate stages of the degeneration: two surfaces glued along a
//! cycle, `2ab` quadrics, and finally the `4ab` planes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{build_pillow, check_bidegree, label, Half, Line, LineKind, PillowConfig, Side, VertexId};
use crate::error::Result;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    TwoSurfaces,
    Quadrics,
    Planes,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::TwoSurfaces => "two_surfaces",
            Stage::Quadrics => "quadrics",
            Stage::Planes => "planes",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceShape {
    Surface,
    Rectangle,
    Triangle(Half),
}

/// A face of a stage with its boundary listed as a closed vertex cycle.
/// `row`/`col` locate a rectangle or triangle cell and are 0 for whole surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageFace {
    pub side: Side,
    pub row: u32,
    pub col: u32,
    pub shape: FaceShape,
    pub boundary: Vec<VertexId>,
}

impl StageFace {
    pub fn boundary_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.boundary.len();
        (0..n).map(move |i| {
            let (p, q) = (self.boundary[i], self.boundary[(i + 1) % n]);
            (p.min(q), p.max(q))
        })
    }
}

/// Projective dimensions of the spans of the coordinate points on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpanDimensions {
    pub top: u32,
    pub bottom: u32,
    pub intersection: u32,
    pub ambient: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageConfig {
    pub a: u32,
    pub b: u32,
    pub stage: Stage,
    pub faces: Vec<StageFace>,
    pub lines: Vec<Line>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spans: Option<SpanDimensions>,
}

fn boundary_cycle(a: u32, b: u32) -> Vec<VertexId> {
    (1..=2 * (a + b)).map(VertexId).collect()
}

pub fn two_surface_stage(a: u32, b: u32) -> Result<StageConfig> {
    check_bidegree(a, b)?;
    let cycle = boundary_cycle(a, b);
    let faces = Side::BOTH
        .into_iter()
        .map(|side| StageFace {
            side,
            row: 0,
            col: 0,
            shape: FaceShape::Surface,
            boundary: cycle.clone(),
        })
        .collect();
    let pillow = build_pillow(a, b)?;
    let lines = pillow
        .lines
        .iter()
        .filter(|l| l.kind == LineKind::Boundary)
        .copied()
        .collect();

    // Coordinate points are independent, so a span of k of them has
    // projective dimension k - 1.
    let points = |side| (cycle.len() + pillow.interior_vertices(side).len()) as u32;
    let spans = SpanDimensions {
        top: points(Side::Top) - 1,
        bottom: points(Side::Bottom) - 1,
        intersection: cycle.len() as u32 - 1,
        ambient: pillow.vertices.len() as u32 - 1,
    };
    Ok(StageConfig {
        a,
        b,
        stage: Stage::TwoSurfaces,
        faces,
        lines,
        spans: Some(spans),
    })
}

pub fn quadric_stage(a: u32, b: u32) -> Result<StageConfig> {
    let pillow = build_pillow(a, b)?;
    let mut faces = Vec::with_capacity(2 * (a * b) as usize);
    for side in Side::BOTH {
        for row in 0..b {
            for col in 0..a {
                let at = |r, c| label(a, b, side, r, c);
                faces.push(StageFace {
                    side,
                    row: row + 1,
                    col: col + 1,
                    shape: FaceShape::Rectangle,
                    boundary: vec![at(row, col), at(row, col + 1), at(row + 1, col + 1), at(row + 1, col)],
                });
            }
        }
    }
    let lines = pillow
        .lines
        .iter()
        .filter(|l| l.kind != LineKind::Diagonal)
        .copied()
        .collect();
    Ok(StageConfig {
        a,
        b,
        stage: Stage::Quadrics,
        faces,
        lines,
        spans: None,
    })
}

pub fn planes_stage(a: u32, b: u32) -> Result<StageConfig> {
    Ok(planes_stage_of(&build_pillow(a, b)?))
}

pub fn planes_stage_of(pillow: &PillowConfig) -> StageConfig {
    let faces = pillow
        .triangles
        .iter()
        .map(|t| StageFace {
            side: t.side,
            row: t.row,
            col: t.col,
            shape: FaceShape::Triangle(t.half),
            boundary: t.vertices.to_vec(),
        })
        .collect();
    StageConfig {
        a: pillow.a,
        b: pillow.b,
        stage: Stage::Planes,
        faces,
        lines: pillow.lines.clone(),
        spans: None,
    }
}

pub const CHECK_FACE_COUNT: &str = "face count";
pub const CHECK_LINE_COUNT: &str = "line count";
pub const CHECK_FACE_BOUNDARIES: &str = "every face boundary is a closed cycle of stage lines";
pub const CHECK_LINES_IN_TWO: &str = "every line bounds exactly 2 faces";
pub const CHECK_RECTANGLE_SIDES: &str = "every rectangle is bounded by 4 lines";
pub const CHECK_TOP_SPAN: &str = "top span dimension = ab + a + b";
pub const CHECK_BOTTOM_SPAN: &str = "bottom span dimension = ab + a + b";
pub const CHECK_INTERSECTION_SPAN: &str = "intersection span dimension = 2a + 2b - 1";
pub const CHECK_POINT_PARTITION: &str = "top + bottom - boundary points = g + 1";

pub fn verify_stage(s: &StageConfig) -> VerificationReport {
    let (a, b) = (i128::from(s.a), i128::from(s.b));
    let mut report = VerificationReport::new();
    let (faces, lines) = match s.stage {
        Stage::TwoSurfaces => (2, 2 * a + 2 * b),
        Stage::Quadrics => (2 * a * b, 4 * a * b),
        Stage::Planes => (4 * a * b, 6 * a * b),
    };
    report.equal(CHECK_FACE_COUNT, s.faces.len() as i128, faces);
    report.equal(CHECK_LINE_COUNT, s.lines.len() as i128, lines);

    let line_keys: BTreeSet<_> = s.lines.iter().map(Line::key).collect();
    let mut bounded: BTreeMap<(VertexId, VertexId), usize> =
        line_keys.iter().map(|&k| (k, 0)).collect();
    let mut closed = 0;
    for face in &s.faces {
        let edges: Vec<_> = face.boundary_edges().collect();
        let distinct: BTreeSet<_> = edges.iter().collect();
        let vertices: BTreeSet<_> = face.boundary.iter().collect();
        if face.boundary.len() >= 3
            && vertices.len() == face.boundary.len()
            && distinct.len() == edges.len()
            && edges.iter().all(|e| line_keys.contains(e))
        {
            closed += 1;
        }
        for e in edges {
            *bounded.entry(e).or_default() += 1;
        }
    }
    report.equal(CHECK_FACE_BOUNDARIES, closed, s.faces.len() as i128);
    let in_two = bounded.values().filter(|&&n| n == 2).count();
    report.equal(CHECK_LINES_IN_TWO, in_two as i128, bounded.len() as i128);

    if s.stage == Stage::Quadrics {
        let four = s.faces.iter().filter(|f| f.boundary_edges().count() == 4).count();
        report.equal(CHECK_RECTANGLE_SIDES, four as i128, s.faces.len() as i128);
    }

    if let Some(spans) = s.spans {
        report.equal(CHECK_TOP_SPAN, spans.top, a * b + a + b);
        report.equal(CHECK_BOTTOM_SPAN, spans.bottom, a * b + a + b);
        report.equal(CHECK_INTERSECTION_SPAN, spans.intersection, 2 * a + 2 * b - 1);
        let partition = i128::from(spans.top + 1) + i128::from(spans.bottom + 1)
            - i128::from(spans.intersection + 1);
        report.equal(CHECK_POINT_PARTITION, partition, 2 * a * b + 2);
    }
    report
}
