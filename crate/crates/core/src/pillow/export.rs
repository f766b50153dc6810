//! JSON and Graphviz exports. Orderings follow `PillowConfig`'s own sorted
//! vectors, so output is stable byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::{face_adjacency, Half, LineKind, LineSide, PillowConfig, Side, VertexId};

const LABELING: &str = "boundary 1..2a+2b clockwise from the top-left corner; \
                        interior points row-major, top then bottom";

#[derive(Serialize)]
struct LineJson {
    u: VertexId,
    v: VertexId,
    kind: LineKind,
    side: LineSide,
}

#[derive(Serialize)]
struct TriangleJson {
    v1: VertexId,
    v2: VertexId,
    v3: VertexId,
    side: Side,
    row: u32,
    col: u32,
    half: Half,
}

#[derive(Serialize)]
struct PillowJson<'a> {
    a: u32,
    b: u32,
    g: u32,
    labeling: &'a str,
    vertices: &'a [VertexId],
    lines: Vec<LineJson>,
    triangles: Vec<TriangleJson>,
}

pub fn to_json_value(c: &PillowConfig) -> serde_json::Value {
    let doc = PillowJson {
        a: c.a,
        b: c.b,
        g: c.g,
        labeling: LABELING,
        vertices: &c.vertices,
        lines: c
            .lines
            .iter()
            .map(|l| LineJson { u: l.u, v: l.v, kind: l.kind, side: l.side })
            .collect(),
        triangles: c
            .triangles
            .iter()
            .map(|t| TriangleJson {
                v1: t.vertices[0],
                v2: t.vertices[1],
                v3: t.vertices[2],
                side: t.side,
                row: t.row,
                col: t.col,
                half: t.half,
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("pillow json is always serializable")
}

pub fn to_json(c: &PillowConfig) -> String {
    let mut s = serde_json::to_string_pretty(&to_json_value(c)).expect("serializable");
    s.push('\n');
    s
}

/// One node per triangle, one edge per shared line (labelled with its
/// endpoints).
pub fn face_adjacency_dot(c: &PillowConfig) -> String {
    let mut out = String::new();
    writeln!(out, "graph pillow_{}_{}_faces {{", c.a, c.b).unwrap();
    for t in &c.triangles {
        let [x, y, z] = t.vertices;
        writeln!(out, "  {} [label=\"{x} {y} {z}\"];", t.node_name()).unwrap();
    }
    for (i, j) in face_adjacency(c) {
        let (s, t) = (&c.triangles[i], &c.triangles[j]);
        let shared: Vec<String> = s
            .vertices
            .iter()
            .filter(|v| t.contains(**v))
            .map(ToString::to_string)
            .collect();
        writeln!(
            out,
            "  {} -- {} [label=\"{}\"];",
            s.node_name(),
            t.node_name(),
            shared.join("-")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// One node per line, one edge per pair of lines meeting at a vertex.
pub fn line_intersection_dot(c: &PillowConfig) -> String {
    let name = |i: usize| format!("l{}_{}", c.lines[i].u, c.lines[i].v);
    let mut through: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, l) in c.lines.iter().enumerate() {
        through.entry(l.u).or_default().push(i);
        through.entry(l.v).or_default().push(i);
    }
    let mut out = String::new();
    writeln!(out, "graph pillow_{}_{}_lines {{", c.a, c.b).unwrap();
    for i in 0..c.lines.len() {
        writeln!(out, "  {};", name(i)).unwrap();
    }
    for (v, ids) in &through {
        for (k, &i) in ids.iter().enumerate() {
            for &j in &ids[k + 1..] {
                writeln!(out, "  {} -- {} [label=\"{v}\"];", name(i), name(j)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
