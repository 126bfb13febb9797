//! The minimum-polynomial table for the unitary family, replayed through the parameter
//! conditions.

use serde::{Deserialize, Serialize};

use crate::field::{prime_power, FieldSpec};
use crate::generators::{check_conditions, Clause, Family};

/// One listed value of `q` with the minimum polynomial of `a` over GF(p), ascending
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub q: u64,
    pub min_poly: Vec<i64>,
}

pub fn unitary_table() -> Vec<TableEntry> {
    let rows: [(u64, &[i64]); 8] = [
        (3, &[-2, 1, 1]),
        (4, &[-1, 0, 0, 1, 1]),
        (5, &[-3, 1, 1]),
        (7, &[3, 1, 1]),
        (8, &[1, 1, 0, 0, 0, 0, 1]),
        (9, &[-1, 0, 0, 1, 1]),
        (11, &[-3, 1, 1]),
        (13, &[-2, 1, 1]),
    ];
    rows.iter()
        .map(|&(q, m)| TableEntry {
            q,
            min_poly: m.to_vec(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub q: u64,
    pub min_poly: String,
    pub passed: bool,
    /// Why the field could not be built, if it could not.
    pub error: Option<String>,
    pub clauses: Vec<Clause>,
}

/// Builds GF(p)[t]/(m_a) for each entry and checks the unitary conditions at `a = t`.
pub fn check_table_entry(entry: &TableEntry) -> TableRow {
    let (p, _) = prime_power(entry.q).expect("table values are prime powers");
    let reduced: Vec<u32> = entry
        .min_poly
        .iter()
        .map(|&c| c.rem_euclid(p as i64) as u32)
        .collect();
    let shown = format_poly(&entry.min_poly);
    let field = match FieldSpec::new(p, reduced) {
        Ok(f) if f.order() as u64 == entry.q * entry.q => f,
        Ok(f) => {
            return TableRow {
                q: entry.q,
                min_poly: shown,
                passed: false,
                error: Some(format!("field has order {}, expected {}", f.order(), entry.q * entry.q)),
                clauses: Vec::new(),
            }
        }
        Err(e) => {
            return TableRow {
                q: entry.q,
                min_poly: shown,
                passed: false,
                error: Some(e.to_string()),
                clauses: Vec::new(),
            }
        }
    };
    let a = field.root_of_modulus();
    let report = check_conditions(Family::Dim7Unit, &field, a);
    TableRow {
        q: entry.q,
        min_poly: shown,
        passed: report.all_pass(),
        error: None,
        clauses: report.clauses,
    }
}

pub fn check_unitary_table() -> Vec<TableRow> {
    unitary_table().iter().map(check_table_entry).collect()
}

/// `t^2 + t - 2` style rendering, highest degree first.
pub fn format_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mag != 1 || k == 0 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
