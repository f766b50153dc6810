//! Bookkeeping for the limit of the branch curve under the pillow
//! degeneration.
//!
//! The limit curve is the union of the images of the `3g - 3` double lines,
//! each counted twice. Its special points are the images of the
//! configuration's vertices (3-points at the corners, 6-points elsewhere) and
//! the crossings of images of disjoint lines (2-points). Each special point
//! absorbs a fixed budget of branch points, nodes and cusps of the nearby
//! smooth branch curve; this module tabulates them from an actual complex and
//! checks the totals against the characters of a general K3 branch curve.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pillow::{count_disjoint_line_pairs, formula_disjoint_pairs, line_degrees, PillowConfig};
use crate::report::VerificationReport;
use crate::surface::{branch_characters, del_pezzo, k3, BranchCharacters};

/// Characters of the branch curve of a Del Pezzo surface of degree `n`, the
/// local smoothing of `n` planes through a point.
pub fn local_del_pezzo_characters(n: i64) -> Result<BranchCharacters> {
    if !(3..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("n = {n}, need 3 <= n <= 6")));
    }
    Ok(BranchCharacters {
        b: 2 * n,
        n: 2 * (n - 2) * (n - 3),
        k: 6 * n - 12,
        t: 12,
    })
}

/// What an `n`-point of the limit curve absorbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NPointBudget {
    pub n: i64,
    pub branch_points: i64,
    pub nodes: i64,
    pub cusps: i64,
}

/// For `n >= 3` all nodes and cusps of the local Del Pezzo branch curve land
/// on the point, and all but `n` of its 12 branch points do (the rest go one
/// to each line). A 2-point is the crossing of two doubled lines: 4 nodes.
pub fn npoint_budget(n: i64) -> Result<NPointBudget> {
    match n {
        2 => Ok(NPointBudget {
            n,
            branch_points: 0,
            nodes: 4,
            cusps: 0,
        }),
        3..=6 => {
            let local = local_del_pezzo_characters(n)?;
            Ok(NPointBudget {
                n,
                branch_points: local.t - n,
                nodes: local.n,
                cusps: local.k,
            })
        }
        _ => Err(Error::InvalidParameter(format!("n = {n}, need 2 <= n <= 6"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectType {
    Lines,
    ThreePoints,
    SixPoints,
    TwoPoints,
}

impl ObjectType {
    pub fn title(self) -> &'static str {
        match self {
            ObjectType::Lines => "Lines",
            ObjectType::ThreePoints => "3-points",
            ObjectType::SixPoints => "6-points",
            ObjectType::TwoPoints => "2-points",
        }
    }
}

/// One row: how many objects of the type, and what each one absorbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub object_type: ObjectType,
    pub count: i64,
    pub branch: i64,
    pub nodes: i64,
    pub cusps: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub branch: i64,
    pub nodes: i64,
    pub cusps: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerationTable {
    pub g: i64,
    pub rows: Vec<TableRow>,
    pub totals: Totals,
}

impl DegenerationTable {
    pub fn row(&self, t: ObjectType) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.object_type == t)
    }

    pub fn column_sums(&self) -> Totals {
        let sum = |f: fn(&TableRow) -> i64| self.rows.iter().map(|r| r.count * f(r)).sum();
        Totals {
            branch: sum(|r| r.branch),
            nodes: sum(|r| r.nodes),
            cusps: sum(|r| r.cusps),
        }
    }

    pub fn recompute_totals(&mut self) {
        self.totals = self.column_sums();
    }
}

/// Counts every object on the complex itself: lines, vertices by line
/// degree, and disjoint line pairs by enumeration.
pub fn build_table(c: &PillowConfig) -> Result<DegenerationTable> {
    let degrees = line_degrees(c);
    if let Some((v, d)) = degrees.iter().find(|(_, &d)| d != 3 && d != 6) {
        return Err(Error::MalformedComplex(format!(
            "vertex {v} lies on {d} lines; only 3 or 6 are possible"
        )));
    }
    let with_degree = |n| degrees.values().filter(|&&d| d == n).count() as i64;

    let mut rows = vec![TableRow {
        object_type: ObjectType::Lines,
        count: c.lines.len() as i64,
        branch: 0,
        nodes: 0,
        cusps: 0,
    }];
    for (object_type, n, count) in [
        (ObjectType::ThreePoints, 3, with_degree(3)),
        (ObjectType::SixPoints, 6, with_degree(6)),
        (ObjectType::TwoPoints, 2, count_disjoint_line_pairs(c) as i64),
    ] {
        let budget = npoint_budget(n)?;
        rows.push(TableRow {
            object_type,
            count,
            branch: budget.branch_points,
            nodes: budget.nodes,
            cusps: budget.cusps,
        });
    }
    let mut table = DegenerationTable {
        g: i64::from(c.g),
        rows,
        totals: Totals {
            branch: 0,
            nodes: 0,
            cusps: 0,
        },
    };
    table.recompute_totals();
    Ok(table)
}

pub const CHECK_TOTALS_ARE_SUMS: &str = "totals are the column sums";
pub const CHECK_LINES_ROW_ZERO: &str = "nothing degenerates to a smooth point of a line";
pub const CHECK_BRANCH_CONSERVED: &str = "branch points total = t of the K3 branch curve";
pub const CHECK_NODES_CONSERVED: &str = "nodes total = n of the K3 branch curve";
pub const CHECK_CUSPS_CONSERVED: &str = "cusps total = k of the K3 branch curve";
pub const CHECK_BRANCH_CLOSED: &str = "branch points total = 6g + 18";
pub const CHECK_NODES_CLOSED: &str = "nodes total = 18g^2 - 78g + 84";
pub const CHECK_CUSPS_CLOSED: &str = "cusps total = 24(g - 2)";
pub const CHECK_DEGREE_CONSERVED: &str = "2 x lines = degree of the K3 branch curve";
pub const CHECK_LINES_COUNT: &str = "lines = 3g - 3";
pub const CHECK_THREE_POINTS: &str = "3-points = 4";
pub const CHECK_SIX_POINTS: &str = "6-points = g - 3";
pub const CHECK_TWO_POINTS: &str = "2-points = (9g^2 - 51g + 78)/2";

/// Compares a table against the smooth K3 branch curve of genus `table.g`
/// and against the closed forms of each row and total.
pub fn check_table_conservation(table: &DegenerationTable) -> Result<VerificationReport> {
    let g = table.g;
    let global = branch_characters(&k3(g)?)?;
    let count = |t| table.row(t).map_or(0, |r| r.count);
    let mut report = VerificationReport::new();

    let sums = table.column_sums();
    let mismatched = [
        (table.totals.branch, sums.branch),
        (table.totals.nodes, sums.nodes),
        (table.totals.cusps, sums.cusps),
    ]
    .iter()
    .filter(|(x, y)| x != y)
    .count();
    report.equal(CHECK_TOTALS_ARE_SUMS, mismatched as i128, 0);
    let lines_row = table
        .row(ObjectType::Lines)
        .map_or(0, |r| r.count * (r.branch.abs() + r.nodes.abs() + r.cusps.abs()));
    report.equal(CHECK_LINES_ROW_ZERO, lines_row, 0);

    report.equal(CHECK_BRANCH_CONSERVED, table.totals.branch, global.t);
    report.equal(CHECK_NODES_CONSERVED, table.totals.nodes, global.n);
    report.equal(CHECK_CUSPS_CONSERVED, table.totals.cusps, global.k);
    report.equal(CHECK_BRANCH_CLOSED, table.totals.branch, 6 * g + 18);
    report.equal(CHECK_NODES_CLOSED, table.totals.nodes, 18 * g * g - 78 * g + 84);
    report.equal(CHECK_CUSPS_CLOSED, table.totals.cusps, 24 * (g - 2));
    report.equal(CHECK_DEGREE_CONSERVED, 2 * count(ObjectType::Lines), global.b);

    report.equal(CHECK_LINES_COUNT, count(ObjectType::Lines), 3 * g - 3);
    report.equal(CHECK_THREE_POINTS, count(ObjectType::ThreePoints), 4);
    report.equal(CHECK_SIX_POINTS, count(ObjectType::SixPoints), g - 3);
    let pairs = u64::try_from(g)
        .map_err(|_| Error::InvalidParameter(format!("g = {g}")))
        .and_then(formula_disjoint_pairs)?;
    report.equal(CHECK_TWO_POINTS, i128::from(count(ObjectType::TwoPoints)), i128::from(pairs));
    Ok(report)
}

pub fn verify_conservation(c: &PillowConfig) -> Result<VerificationReport> {
    check_table_conservation(&build_table(c)?)
}

/// Agreement of the local budgets with the Del Pezzo characters computed
/// from intersection numbers.
pub fn verify_local_budgets() -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for n in 3..=6 {
        let local = local_del_pezzo_characters(n)?;
        let global = branch_characters(&del_pezzo(n)?)?;
        let budget = npoint_budget(n)?;
        for (what, x, y) in [
            ("b", local.b, global.b),
            ("n", local.n, global.n),
            ("k", local.k, global.k),
            ("t", local.t, global.t),
        ] {
            report.equal(format!("local del pezzo {what} = global (n = {n})"), x, y);
        }
        report.equal(format!("budget branch points + n = 12 (n = {n})"), budget.branch_points + n, 12);
        report.equal(format!("budget nodes = local nodes (n = {n})"), budget.nodes, local.n);
        report.equal(format!("budget cusps = local cusps (n = {n})"), budget.cusps, local.k);
    }
    Ok(report)
}

impl fmt::Display for DegenerationTable {
    /// Plain-text table in the order Lines, 3-points, 6-points, 2-points,
    /// Totals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = ["Object type", "Number", "Branch points", "Nodes", "Cusps"];
        let mut cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.object_type.title().to_string(),
                    r.count.to_string(),
                    r.branch.to_string(),
                    r.nodes.to_string(),
                    r.cusps.to_string(),
                ]
            })
            .collect();
        cells.push([
            "Totals".to_string(),
            String::new(),
            self.totals.branch.to_string(),
            self.totals.nodes.to_string(),
            self.totals.cusps.to_string(),
        ]);
        let mut widths = header.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, row: &[&str]| -> fmt::Result {
            let parts: Vec<String> = row
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                .collect();
            writeln!(f, "{}", parts.join(" | ").trim_end())
        };
        writeln!(f, "g = {}", self.g)?;
        line(f, &header)?;
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(f, "{}", rule.join("-+-"))?;
        for (i, row) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                writeln!(f, "{}", rule.join("-+-"))?;
            }
            line(f, &row.each_ref().map(String::as_str))?;
        }
        Ok(())
    }
}
