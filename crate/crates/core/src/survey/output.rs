use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::enumerate::{family_c4_c6, CurveRecord, FifthPowers};
use super::SurveyRow;
use crate::curve::{height_key, height_of_key};
use crate::parametric::Family;
use crate::{Error, Result};

/// One finished block of a survey, as stored in a checkpoint file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckpointBlock {
    pub ell: u32,
    pub x: f64,
    pub sum_bound: u64,
    /// Index of the block of consecutive `a` values.
    pub block: u64,
    #[serde(default)]
    pub fifth_powers: FifthPowers,
    pub records: Vec<CurveRecord>,
}

/// Reads every complete line of a checkpoint file; a missing file is empty
/// and a torn final line (from an interrupted write) is ignored.
pub fn read_checkpoint(path: &Path) -> Result<Vec<CheckpointBlock>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(&line) {
            Ok(b) => out.push(b),
            Err(_) => break,
        }
    }
    Ok(out)
}

pub(super) fn append_checkpoint(path: &Path, block: &CheckpointBlock) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    let mut line = serde_json::to_string(block).map_err(|e| Error::Io(e.to_string()))?;
    line.push('\n');
    f.write_all(line.as_bytes())?;
    Ok(())
}

/// Writes `family,a,b,height,c,c_tilde,bad_primes,rules`, one row per record.
/// Lists inside a field are separated by `;`.
pub fn write_csv<W: Write>(out: W, family: Family, records: &[CurveRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["family", "a", "b", "height", "c", "c_tilde", "bad_primes", "rules"])
        .map_err(io)?;
    for r in records {
        let (c4, c6) = family_c4_c6(family, &BigInt::from(r.a), &BigInt::from(r.b));
        let height = height_of_key(&height_key(&c4, &c6));
        let rules: Vec<&str> = r.rules.iter().map(|x| x.id()).collect();
        w.write_record([
            family.to_string(),
            r.a.to_string(),
            r.b.to_string(),
            format!("{height:.6}"),
            r.c.to_string(),
            r.c_tilde.to_string(),
            r.bad_primes.join(";"),
            rules.join(";"),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// `{"ell": .., "X": .., "N": .., "G": .., "percent": ..}`
pub fn write_summary_json<W: Write>(mut out: W, row: &SurveyRow) -> Result<()> {
    serde_json::to_writer(&mut out, row).map_err(|e| Error::Io(e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::Rule;

    #[test]
    fn summary_schema() {
        let mut buf = Vec::new();
        write_summary_json(&mut buf, &SurveyRow::new(5, 4.0, 581, 958)).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["ell"], 5);
        assert_eq!(v["N"], 581);
        assert_eq!(v["G"], 958);
        assert_eq!(v["X"], 4.0);
        assert!((v["percent"].as_f64().unwrap() - 60.647).abs() < 1e-2);
    }

    #[test]
    fn csv_schema() {
        let rec = CurveRecord {
            a: 1,
            b: 2,
            c: 5,
            c_tilde: 1,
            power_free_coprime: true,
            bad_primes: vec!["2".into(), "19".into()],
            rules: vec![Rule::C5DividesAB, Rule::C5FormNonsplit],
        };
        let mut buf = Vec::new();
        write_csv(&mut buf, Family::C5, &[rec]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "family,a,b,height,c,c_tilde,bad_primes,rules");
        let row = lines.next().unwrap();
        assert!(row.starts_with("C5,1,2,"), "{row}");
        assert!(row.ends_with(",5,1,2;19,C5:vp(ab)>0;C5:vp(f5)>0/nonsplit"), "{row}");
    }

    #[test]
    fn checkpoint_round_trip_and_torn_tail() {
        let dir = std::env::temp_dir().join(format!("tamagawa-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.ndjson");
        let _ = std::fs::remove_file(&path);
        assert!(read_checkpoint(&path).unwrap().is_empty());
        let blk = CheckpointBlock { ell: 5, x: 4.0, sum_bound: 10, block: 0, fifth_powers: FifthPowers::Include, records: vec![] };
        append_checkpoint(&path, &blk).unwrap();
        std::fs::OpenOptions::new().append(true).open(&path).unwrap().write_all(b"{\"ell\":5,").unwrap();
        assert_eq!(read_checkpoint(&path).unwrap(), vec![blk]);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
