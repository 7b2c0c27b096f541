use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::*;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Stirling2,
    Stirling1,
    Stirling2Mod,
    Stirling1Mod,
    Stirling1Higher,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Stirling2,
        Family::Stirling1,
        Family::Stirling2Mod,
        Family::Stirling1Mod,
        Family::Stirling1Higher,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling2 => "stirling2",
            Family::Stirling1 => "stirling1",
            Family::Stirling2Mod => "stirling2mod",
            Family::Stirling1Mod => "stirling1mod",
            Family::Stirling1Higher => "stirling1higher",
        }
    }

    /// Whether `s` changes the values.
    pub fn uses_s(self) -> bool {
        !matches!(self, Family::Stirling2 | Family::Stirling1)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| {
                Error::usage(format!(
                    "unknown family '{s}' (expected one of stirling2, stirling1, stirling2mod, stirling1mod, stirling1higher)"
                ))
            })
    }
}

/// A single Stirling value request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StirlingQuery {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub family: Family,
}

impl StirlingQuery {
    pub fn eval(&self) -> Result<BigInt> {
        if self.s == 0 {
            return Err(Error::usage("s must be at least 1"));
        }
        let (n, k, s) = (self.n, self.k, self.s);
        Ok(match self.family {
            Family::Stirling2 => stirling2(n, k),
            Family::Stirling1 => stirling1(n, k),
            Family::Stirling2Mod => {
                if k > n {
                    BigInt::default()
                } else {
                    stirling2_mod(n, k, s, Stirling2ModMethod::Recurrence)?
                }
            }
            Family::Stirling1Mod => stirling1_mod_rec(n, k as i64, s),
            Family::Stirling1Higher => stirling1_higher(n, k, s),
        })
    }
}

/// A triangle of values: `rows[n][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub family: Family,
    /// `None` for the classical families.
    pub s: Option<usize>,
    pub rows: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    family: Family,
    s: Option<usize>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CsvRecord {
    n: usize,
    k: usize,
    value: String,
}

impl Triangle {
    /// Rows `0..=n_max`. The second-kind and higher-level families hold
    /// `k = 0..=n`; the modular first kind holds `k = 0..=(n-1)s+1`.
    pub fn build(family: Family, s: usize, n_max: usize) -> Result<Triangle> {
        if s == 0 {
            return Err(Error::usage("s must be at least 1"));
        }
        let rows = match family {
            Family::Stirling2 => stirling2_triangle(n_max),
            Family::Stirling1 => stirling1_triangle(n_max),
            Family::Stirling2Mod => stirling2_mod_triangle(s, n_max),
            Family::Stirling1Mod => stirling1_mod_triangle(s, n_max),
            Family::Stirling1Higher => stirling1_higher_triangle(s, n_max),
        };
        Ok(Triangle {
            family,
            s: family.uses_s().then_some(s),
            rows,
        })
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    /// One line per row, values separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(BigInt::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// CSV with header `n,k,value`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                w.serialize(CsvRecord {
                    n,
                    k,
                    value: v.to_string(),
                })
                .expect("in-memory csv write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }

    /// Parses the `n,k,value` CSV form. Family and `s` are not part of the
    /// CSV and must be supplied.
    pub fn from_csv(family: Family, s: Option<usize>, text: &str) -> Result<Triangle> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut r = csv::Reader::from_reader(text.as_bytes());
        for rec in r.deserialize::<CsvRecord>() {
            let rec = rec.map_err(|e| Error::usage(format!("bad csv: {e}")))?;
            let v: BigInt = rec
                .value
                .parse()
                .map_err(|e| Error::usage(format!("bad value '{}': {e}", rec.value)))?;
            if rec.n == rows.len() && rec.k == 0 {
                rows.push(Vec::new());
            }
            let last = rows.len().checked_sub(1);
            match rows.last_mut() {
                Some(row) if last == Some(rec.n) && row.len() == rec.k => row.push(v),
                _ => {
                    return Err(Error::usage(format!(
                        "csv cell ({}, {}) out of order",
                        rec.n, rec.k
                    )))
                }
            }
        }
        Ok(Triangle { family, s, rows })
    }

    /// `{"family": ..., "s": ..., "rows": [[...], ...]}` with values as
    /// decimal strings.
    pub fn to_json(&self) -> String {
        let j = TriangleJson {
            family: self.family,
            s: self.s,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("triangle serialization is infallible")
    }
}
