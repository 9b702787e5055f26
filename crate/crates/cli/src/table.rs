//! Rounded, renderable form of a reduced-integral table.

use soliton_core::stability::ReducedTable;

use crate::emit::fmt_num;
use crate::error::{CliError, Result};

pub const DECIMALS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub lambda: f64,
    pub s0_rows: Vec<f64>,
    pub l_columns: Vec<f64>,
    /// Cells rounded half away from zero to [`DECIMALS`] places.
    pub cells: Vec<Vec<f64>>,
    /// Column of the first negative cell per row, from the unrounded values.
    pub first_negative_marks: Vec<Option<usize>>,
}

/// Round the shortest decimal representation of `x` half away from zero.
///
/// Working on the decimal string rather than `x · 10^d` means a value that
/// prints as `0.00005` rounds to `0.0001`, as a reader would expect.
pub fn round_half_away(x: f64, decimals: usize) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let text = format!("{}", x.abs());
    let (int, frac) = text.split_once('.').unwrap_or((&text, ""));
    if frac.len() <= decimals {
        return x;
    }
    let mut digits: Vec<u8> = int.bytes().chain(frac[..decimals].bytes()).collect();
    if frac.as_bytes()[decimals] >= b'5' {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let split = digits.len() - decimals;
    let rounded = format!(
        "{}.{}",
        std::str::from_utf8(&digits[..split]).unwrap_or("0"),
        std::str::from_utf8(&digits[split..]).unwrap_or("0")
    );
    let magnitude: f64 = rounded.parse().unwrap_or(f64::NAN);
    magnitude.copysign(x)
}

impl TableReport {
    pub fn from_table(table: &ReducedTable) -> Self {
        Self {
            lambda: table.lambda,
            s0_rows: table.s0_values.clone(),
            l_columns: table.lengths.clone(),
            cells: table
                .cells
                .iter()
                .map(|row| row.iter().map(|&v| round_half_away(v, DECIMALS)).collect())
                .collect(),
            first_negative_marks: table.first_negative(),
        }
    }

    fn cell(&self, i: usize, j: usize) -> String {
        format!("{:.*}", DECIMALS, self.cells[i][j])
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("I(u) for λ = {}; first negative value per row in bold\n\n", fmt_num(self.lambda));
        out.push_str("| s0 \\ L |");
        for &l in &self.l_columns {
            out.push_str(&format!(" {} |", fmt_num(l)));
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(self.l_columns.len()));
        out.push('\n');
        for (i, &s0) in self.s0_rows.iter().enumerate() {
            out.push_str(&format!("| {} |", fmt_num(s0)));
            for j in 0..self.l_columns.len() {
                if self.first_negative_marks[i] == Some(j) {
                    out.push_str(&format!(" **{}** |", self.cell(i, j)));
                } else {
                    out.push_str(&format!(" {} |", self.cell(i, j)));
                }
            }
            out.push('\n');
        }
        out
    }

    /// `lambda,s0,<L columns...>,first_negative_L`, one row per `s0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,s0");
        for &l in &self.l_columns {
            out.push(',');
            out.push_str(&fmt_num(l));
        }
        out.push_str(",first_negative_L\n");
        for (i, &s0) in self.s0_rows.iter().enumerate() {
            out.push_str(&format!("{},{}", fmt_num(self.lambda), fmt_num(s0)));
            for j in 0..self.l_columns.len() {
                out.push(',');
                out.push_str(&self.cell(i, j));
            }
            out.push(',');
            if let Some(j) = self.first_negative_marks[i] {
                out.push_str(&fmt_num(self.l_columns[j]));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |msg: String| CliError::Parse(msg);
        let num = |field: &str| -> Result<f64> {
            field.trim().parse::<f64>().map_err(|_| bad(format!("not a number: {field:?}")))
        };
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty input".into()))?.split(',').collect();
        if header.len() < 3 || header[0] != "lambda" || header[1] != "s0" || header[header.len() - 1] != "first_negative_L" {
            return Err(bad("unexpected header".into()));
        }
        let l_columns = header[2..header.len() - 1].iter().map(|f| num(f)).collect::<Result<Vec<_>>>()?;
        let width = header.len();

        let mut lambda = None;
        let mut s0_rows = Vec::new();
        let mut cells = Vec::new();
        let mut marks = Vec::new();
        for (n, line) in lines.enumerate() {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != width {
                return Err(bad(format!("row {} has {} fields, expected {width}", n + 1, fields.len())));
            }
            let row_lambda = num(fields[0])?;
            if *lambda.get_or_insert(row_lambda) != row_lambda {
                return Err(bad(format!("row {} has a different λ", n + 1)));
            }
            s0_rows.push(num(fields[1])?);
            cells.push(fields[2..width - 1].iter().map(|f| num(f)).collect::<Result<Vec<_>>>()?);
            let mark = fields[width - 1].trim();
            marks.push(if mark.is_empty() {
                None
            } else {
                let l = num(mark)?;
                Some(
                    l_columns
                        .iter()
                        .position(|&c| c == l)
                        .ok_or_else(|| bad(format!("mark L = {l} is not a column")))?,
                )
            });
        }
        Ok(Self {
            lambda: lambda.ok_or_else(|| bad("no rows".into()))?,
            s0_rows,
            l_columns,
            cells,
            first_negative_marks: marks,
        })
    }
}
