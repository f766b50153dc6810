use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{PillowConfig, Triangle, VertexId};
use crate::report::VerificationReport;

pub const CHECK_LINES_IN_TWO_FACES: &str = "every line lies in exactly 2 triangles";
pub const CHECK_LINKS_ARE_CYCLES: &str = "every vertex link is one closed cycle";
pub const CHECK_FACES_CONNECTED: &str = "face-adjacency graph is connected";
pub const CHECK_EULER: &str = "V - E + F = 2";
pub const CHECK_DEGREE_CENSUS: &str = "corners lie in 3 triangles, other vertices in 6";

/// Number of lines through each vertex.
pub fn line_degrees(c: &PillowConfig) -> BTreeMap<VertexId, usize> {
    let mut deg: BTreeMap<VertexId, usize> = c.vertices.iter().map(|&v| (v, 0)).collect();
    for line in &c.lines {
        *deg.entry(line.u).or_default() += 1;
        *deg.entry(line.v).or_default() += 1;
    }
    deg
}

/// Number of triangles containing each vertex.
pub fn triangle_degrees(c: &PillowConfig) -> BTreeMap<VertexId, usize> {
    let mut deg: BTreeMap<VertexId, usize> = c.vertices.iter().map(|&v| (v, 0)).collect();
    for t in &c.triangles {
        for v in t.vertices {
            *deg.entry(v).or_default() += 1;
        }
    }
    deg
}

fn faces_by_edge(triangles: &[Triangle]) -> BTreeMap<(VertexId, VertexId), Vec<usize>> {
    let mut map: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for e in t.edges() {
            map.entry(e).or_default().push(i);
        }
    }
    map
}

/// Pairs of triangle indices sharing a side, each pair listed once with the
/// smaller index first, in lexicographic order.
pub fn face_adjacency(c: &PillowConfig) -> Vec<(usize, usize)> {
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for faces in faces_by_edge(&c.triangles).values() {
        for (i, &x) in faces.iter().enumerate() {
            for &y in &faces[i + 1..] {
                pairs.insert((x.min(y), x.max(y)));
            }
        }
    }
    pairs.into_iter().collect()
}

/// The link of `v` is the graph whose edges are the sides opposite `v` in the
/// triangles containing it. It is one closed cycle iff every link vertex has
/// degree 2 and walking from any of them returns after visiting all.
pub fn vertex_link_is_cycle(triangles: &[Triangle], v: VertexId) -> bool {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for t in triangles.iter().filter(|t| t.contains(v)) {
        let mut others = t.vertices.iter().copied().filter(|&x| x != v);
        let (Some(p), Some(q)) = (others.next(), others.next()) else {
            return false;
        };
        adj.entry(p).or_default().push(q);
        adj.entry(q).or_default().push(p);
    }
    if adj.len() < 3 || adj.values().any(|n| n.len() != 2 || n[0] == n[1]) {
        return false;
    }
    let start = *adj.keys().next().unwrap();
    let (mut prev, mut cur) = (start, adj[&start][0]);
    let mut steps = 1;
    while cur != start {
        let n = &adj[&cur];
        let next = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = next;
        steps += 1;
        if steps > adj.len() {
            return false;
        }
    }
    steps == adj.len()
}

/// Runs the closed-surface checks plus the 3/6 degree census.
pub fn verify_sphere_triangulation(c: &PillowConfig) -> VerificationReport {
    let mut report = VerificationReport::new();
    let by_edge = faces_by_edge(&c.triangles);

    let line_keys: BTreeSet<_> = c.lines.iter().map(|l| l.key()).collect();
    let all_edges: BTreeSet<_> = line_keys.iter().chain(by_edge.keys()).copied().collect();
    let good = all_edges
        .iter()
        .filter(|e| line_keys.contains(e) && by_edge.get(e).map_or(0, Vec::len) == 2)
        .count();
    report.equal(CHECK_LINES_IN_TWO_FACES, good as i128, all_edges.len() as i128);

    let cycles = c
        .vertices
        .iter()
        .filter(|&&v| vertex_link_is_cycle(&c.triangles, v))
        .count();
    report.equal(CHECK_LINKS_ARE_CYCLES, cycles as i128, c.vertices.len() as i128);

    let mut neighbours = vec![Vec::new(); c.triangles.len()];
    for (x, y) in face_adjacency(c) {
        neighbours[x].push(y);
        neighbours[y].push(x);
    }
    let mut seen = vec![false; c.triangles.len()];
    let mut queue = VecDeque::new();
    if !seen.is_empty() {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(x) = queue.pop_front() {
        for &y in &neighbours[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    let reached = seen.iter().filter(|&&s| s).count();
    report.equal(CHECK_FACES_CONNECTED, reached as i128, c.triangles.len() as i128);

    report.equal(CHECK_EULER, c.euler_characteristic(), 2);

    let census = triangle_degrees(c)
        .into_iter()
        .filter(|&(v, deg)| deg == if c.is_corner(v) { 3 } else { 6 })
        .count();
    report.equal(CHECK_DEGREE_CENSUS, census as i128, c.vertices.len() as i128);

    report
}
