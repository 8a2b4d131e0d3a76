//! Deterministic rendering of structure constants, the induced skew
//! cocycle, and the diagonal charge.

use prelie::graded::{antisymmetrize, central_phi, CentralCharge, StructureFamily};
use prelie::scalars::RatFunc;
use serde::Serialize;

/// Which table to render.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Structure constants `f(p, q)`.
    Mul,
    /// The skew cocycle `omega(e_p, e_q)` induced by the diagonal charge.
    Cocycle,
    /// The diagonal charge `phi(p)`.
    Phi,
}

/// Output format for tables and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct PairRow {
    p: i64,
    q: i64,
    value: RatFunc,
}

#[derive(Serialize)]
struct PhiRow {
    p: i64,
    value: RatFunc,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Row {
    Pair(PairRow),
    Phi(PhiRow),
}

#[derive(Serialize)]
struct Table {
    kind: &'static str,
    range: i64,
    rows: Vec<Row>,
}

fn subscript(n: i64) -> String {
    if n < 0 {
        format!("{{{n}}}")
    } else {
        n.to_string()
    }
}

/// Renders one table over `[-range, range]` in the requested format.
pub fn print_table(
    kind: TableKind,
    fam: &StructureFamily,
    range: i64,
    format: OutputFormat,
) -> String {
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    match kind {
        TableKind::Mul => {
            for p in -range..=range {
                for q in -range..=range {
                    let value = fam.coeff(p, q);
                    lines.push(format!("f({p},{q}) = {value}"));
                    rows.push(Row::Pair(PairRow { p, q, value }));
                }
            }
        }
        TableKind::Cocycle => {
            let cc = CentralCharge::table_from_fn(range, central_phi);
            for p in -range..=range {
                let q = -p;
                let value = antisymmetrize(&cc, p, q);
                lines.push(format!(
                    "ω(e_{},e_{}) = {value}",
                    subscript(p),
                    subscript(q)
                ));
                rows.push(Row::Pair(PairRow { p, q, value }));
            }
        }
        TableKind::Phi => {
            for p in -range..=range {
                let value = central_phi(p);
                lines.push(format!("φ({p}) = {value}"));
                rows.push(Row::Phi(PhiRow { p, value }));
            }
        }
    }
    match format {
        OutputFormat::Text => {
            let mut out = lines.join("\n");
            out.push('\n');
            out
        }
        OutputFormat::Json => {
            let table = Table {
                kind: match kind {
                    TableKind::Mul => "mul",
                    TableKind::Cocycle => "cocycle",
                    TableKind::Phi => "phi",
                },
                range,
                rows,
            };
            let mut out = serde_json::to_string(&table).expect("table rows serialize infallibly");
            out.push('\n');
            out
        }
    }
}
