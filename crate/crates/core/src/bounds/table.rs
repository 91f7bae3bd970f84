use std::fmt::Write;

use num_integer::Integer;

use super::{avg_degree_coefficient, BoundSource};
use crate::potential::Rational;

/// Columns reproduced in the comparison table.
pub const TABLE_SOURCES: [BoundSource; 4] = [
    BoundSource::Gallai,
    BoundSource::KostochkaYancey,
    BoundSource::Rabern,
    BoundSource::DpPotential,
];

/// How exact values become 4-decimal strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rendering {
    /// Drop digits past the last place.
    #[default]
    Truncate,
    RoundHalfEven,
}

/// Renders a non-negative rational with `places` decimals.
pub fn format_decimal(value: Rational, places: u32, mode: Rendering) -> String {
    let scale = 10i64.pow(places);
    let scaled = value * scale;
    let (mut q, rem) = scaled.numer().div_mod_floor(scaled.denom());
    if mode == Rendering::RoundHalfEven {
        let twice = 2 * rem;
        let d = *scaled.denom();
        if twice > d || (twice == d && q.is_odd()) {
            q += 1;
        }
    }
    let (int, frac) = q.div_mod_floor(&scale);
    format!("{int}.{frac:0width$}", width = places as usize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub sources: Vec<BoundSource>,
    /// One row per `k`; `None` where a source does not apply.
    pub rows: Vec<(usize, Vec<Option<Rational>>)>,
}

/// Average-degree coefficients of the table columns for each `k`.
pub fn table1(ks: &[usize]) -> Table {
    let rows = ks
        .iter()
        .map(|&k| {
            let cells = TABLE_SOURCES
                .iter()
                .map(|&s| avg_degree_coefficient(s, k).ok())
                .collect();
            (k, cells)
        })
        .collect();
    Table {
        sources: TABLE_SOURCES.to_vec(),
        rows,
    }
}

impl Table {
    fn cell(value: &Option<Rational>, mode: Rendering) -> String {
        value
            .map(|v| format_decimal(v, 4, mode))
            .unwrap_or_default()
    }

    pub fn to_text(&self, mode: Rendering) -> String {
        let mut out = format!("{:>3}", "k");
        for s in &self.sources {
            write!(out, " {:>8}", s.label()).unwrap();
        }
        out.push('\n');
        for (k, cells) in &self.rows {
            write!(out, "{k:>3}").unwrap();
            for c in cells {
                write!(out, " {:>8}", Self::cell(c, mode)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self, mode: Rendering) -> String {
        let mut out = String::from("k");
        for s in &self.sources {
            write!(out, ",{}", s.tag()).unwrap();
        }
        out.push('\n');
        for (k, cells) in &self.rows {
            write!(out, "{k}").unwrap();
            for c in cells {
                write!(out, ",{}", Self::cell(c, mode)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
