//! Flat records for sweep output, serialised as CSV or JSON with 17
//! significant digits so both encodings round-trip to the same `f64`s.

use std::io::{self, Write};
use std::path::Path;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::analysis::SweepRow;

pub const COLUMNS: [&str; 22] = [
    "channel",
    "coupling",
    "p0",
    "p1",
    "p2",
    "r",
    "n_A_BC",
    "n_B_AC",
    "n_C_AB",
    "n_AB",
    "n_AC",
    "n_BC",
    "pi_A",
    "pi_B",
    "pi_C",
    "pi_tangle",
    "cf_n_A_BC",
    "cf_n_BC_AC",
    "cf_pi",
    "dev_A",
    "dev_BC",
    "dev_pi",
];

/// `x` with 17 significant digits in scientific notation.
pub fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

/// One row of a sweep file.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub channel: String,
    pub coupling: String,
    /// Numeric columns in [`COLUMNS`] order, starting at `p0`.
    pub values: [f64; 20],
}

impl From<&SweepRow> for OutputRecord {
    fn from(row: &SweepRow) -> Self {
        let rep = &row.report;
        Self {
            channel: row.kind.label().to_string(),
            coupling: row.coupling.label(),
            values: [
                rep.cfg.p0,
                rep.cfg.p1,
                rep.cfg.p2,
                rep.r,
                rep.n_a_bc,
                rep.n_b_ac,
                rep.n_c_ab,
                rep.n_ab,
                rep.n_ac,
                rep.n_bc,
                rep.pi_a,
                rep.pi_b,
                rep.pi_c,
                rep.pi_tangle,
                row.closed.n_a_bc,
                row.closed.n_bc,
                row.closed.pi,
                row.dev_a(),
                row.dev_bc(),
                row.dev_pi(),
            ],
        }
    }
}

impl OutputRecord {
    pub fn get(&self, column: &str) -> Option<f64> {
        let idx = COLUMNS.iter().position(|c| *c == column)?;
        idx.checked_sub(2).map(|i| self.values[i])
    }

    pub fn csv_line(&self) -> String {
        let mut fields = vec![self.channel.clone(), self.coupling.clone()];
        fields.extend(self.values.iter().map(|&v| fmt17(v)));
        fields.join(",")
    }
}

impl Serialize for OutputRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(COLUMNS.len()))?;
        map.serialize_entry(COLUMNS[0], &self.channel)?;
        map.serialize_entry(COLUMNS[1], &self.coupling)?;
        for (name, &v) in COLUMNS[2..].iter().zip(&self.values) {
            let raw = RawValue::from_string(fmt17(v)).map_err(serde::ser::Error::custom)?;
            map.serialize_entry(name, &raw)?;
        }
        map.end()
    }
}

pub fn to_csv(records: &[OutputRecord]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for rec in records {
        out.push_str(&rec.csv_line());
        out.push('\n');
    }
    out
}

pub fn to_json(records: &[OutputRecord]) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(records)?;
    s.push('\n');
    Ok(s)
}

pub fn records(rows: &[SweepRow]) -> Vec<OutputRecord> {
    rows.iter().map(OutputRecord::from).collect()
}

/// Write `contents` to a temporary file next to `path`, then rename it into place.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    if !dir.is_dir() {
        return Err(io::Error::new(
            io::ErrorKind::NotFound,
            format!("directory {} does not exist", dir.display()),
        ));
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{sweep, CouplingMode, SweepSpec};
    use crate::channels::ChannelKind;
    use proptest::prelude::*;
    use std::fs;

    fn sample_rows() -> Vec<SweepRow> {
        sweep(
            &SweepSpec::new(ChannelKind::PhaseFlip, CouplingMode::Collective)
                .with_r_values(vec![0.0, 0.5])
                .with_p_values(vec![0.0, 0.3, 0.5]),
        )
        .unwrap()
    }

    fn parse_csv(text: &str) -> Vec<Vec<String>> {
        text.lines()
            .map(|l| l.split(',').map(str::to_string).collect())
            .collect()
    }

    #[test]
    fn csv_header_and_shape() {
        let csv = to_csv(&records(&sample_rows()));
        let rows = parse_csv(&csv);
        assert_eq!(rows[0], COLUMNS.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(rows.len(), 7);
        assert!(rows[1..].iter().all(|r| r.len() == COLUMNS.len()));
        assert!(!csv.contains('\r'));
        assert_eq!(rows[1][0], "phase-flip");
        assert_eq!(rows[1][1], "collective");
    }

    #[test]
    fn json_matches_csv_bitwise() {
        let recs = records(&sample_rows());
        let csv = parse_csv(&to_csv(&recs));
        let json: Vec<serde_json::Map<String, serde_json::Value>> =
            serde_json::from_str(&to_json(&recs).unwrap()).unwrap();
        assert_eq!(json.len(), csv.len() - 1);
        for (obj, line) in json.iter().zip(&csv[1..]) {
            assert_eq!(obj["channel"], line[0].as_str());
            for (k, name) in COLUMNS.iter().enumerate().skip(2) {
                let from_json = obj[*name].as_f64().unwrap();
                let from_csv: f64 = line[k].parse().unwrap();
                assert_eq!(from_json.to_bits(), from_csv.to_bits(), "{name}");
            }
        }
    }

    #[test]
    fn record_lookup_by_column() {
        let recs = records(&sample_rows());
        assert_eq!(recs[0].get("n_A_BC"), Some(recs[0].values[4]));
        assert_eq!(recs[0].get("channel"), None);
        assert_eq!(recs[0].get("nope"), None);
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "a\n").unwrap();
        write_atomic(&path, "b\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "b\n");
        assert!(write_atomic(&dir.path().join("missing/out.csv"), "x").is_err());
    }

    proptest! {
        #[test]
        fn fmt17_round_trips(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
            let s = fmt17(x);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
            let json: f64 = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(json.to_bits(), x.to_bits());
        }
    }
}
