//! Text cache for enumerated stabilizer tables.
//!
//! One file per table:
//!
//! ```text
//! stab7 v1 n=<n>
//! gen <word>            (one line per generator)
//! count <N>
//! <canonical element line, sorted>  (N lines)
//! ```
//!
//! Reload validates the header, the strict ordering of the element lines,
//! round-trip equality of every line, presence of identity/generators/
//! inverses and closure under generator multiplication, and then rebuilds
//! the identical table. A file failing any check is rejected, never
//! partially loaded.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use crate::burau::gamma_eval;
use crate::error::{Error, Result};
use crate::matrix::{parse_canonical_f2l, ProjMat};
use crate::words::parse_word;

use super::{stab7_generator_words, Element, FiniteGroupTable};

pub fn stab7_cache_filename(n: i64) -> String {
    format!("stab7_n{n}.table")
}

pub fn save_stab7(dir: &Path, n: i64, table: &FiniteGroupTable) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut buf = String::new();
    buf.push_str(&format!("stab7 v1 n={n}\n"));
    for w in stab7_generator_words(n)? {
        buf.push_str(&format!("gen {w}\n"));
    }
    buf.push_str(&format!("count {}\n", table.order()));
    for line in table.canonical_lines() {
        buf.push_str(line);
        buf.push('\n');
    }
    let path = dir.join(stab7_cache_filename(n));
    let tmp = dir.join(format!("{}.tmp", stab7_cache_filename(n)));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(buf.as_bytes())?;
    }
    std::fs::rename(&tmp, &path)?;
    Ok(())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::CacheFormat(msg.into())
}

/// Parses and validates a cache file body.
pub fn parse_stab7_text(text: &str, expect_n: i64) -> Result<FiniteGroupTable> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty file"))?;
    let n: i64 = header
        .strip_prefix("stab7 v1 n=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(format!("bad header {header:?}")))?;
    if n != expect_n {
        return Err(bad(format!("file is for n={n}, expected n={expect_n}")));
    }
    if !(0..=16).contains(&n) {
        return Err(bad(format!("unreasonable index n={n}")));
    }
    let mut gen_words = Vec::new();
    let mut count_line = None;
    for line in lines.by_ref() {
        if let Some(w) = line.strip_prefix("gen ") {
            gen_words.push(parse_word(w).map_err(|e| bad(format!("bad generator word: {e}")))?);
        } else {
            count_line = Some(line);
            break;
        }
    }
    if gen_words.len() != n as usize + 2 {
        return Err(bad(format!(
            "expected {} generator lines, found {}",
            n + 2,
            gen_words.len()
        )));
    }
    let count: usize = count_line
        .and_then(|l| l.strip_prefix("count "))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("missing count line"))?;
    if count != 1usize << (2 * n + 4) {
        return Err(bad(format!("count {count} contradicts n={n}")));
    }

    let mut reached: BTreeMap<String, Element> = BTreeMap::new();
    let mut prev: Option<&str> = None;
    for line in lines.by_ref() {
        if prev.is_some_and(|p| p >= line) {
            return Err(bad("element lines are not strictly sorted"));
        }
        prev = Some(line);
        let mat = parse_canonical_f2l(line).map_err(|e| bad(format!("bad element: {e}")))?;
        let elem = ProjMat::new(mat).map_err(|e| bad(format!("singular element: {e}")))?;
        if elem.canonical_string() != line {
            return Err(bad("element line is not in canonical form"));
        }
        reached.insert(line.to_string(), elem);
    }
    if reached.len() != count {
        return Err(bad(format!(
            "count {count} does not match {} element lines",
            reached.len()
        )));
    }

    let gens = gen_words
        .iter()
        .map(|w| gamma_eval(w).map_err(|e| bad(format!("generator image: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    let table = FiniteGroupTable::from_sorted(reached, &gens)
        .map_err(|e| bad(format!("incomplete element set: {e}")))?;
    // closure under generator multiplication; with identity and inverses
    // already present this rules out truncated files
    for pos in 0..table.order() {
        for &gpos in table.generator_positions() {
            for other in [gpos, table.inv_pos(gpos)] {
                let p = table.element(pos).mul(table.element(other));
                if table.position_of(&p).is_none() {
                    return Err(bad("element set is not closed under the generators"));
                }
            }
        }
    }
    Ok(table)
}

pub fn load_stab7(dir: &Path, n: i64) -> Result<FiniteGroupTable> {
    let path = dir.join(stab7_cache_filename(n));
    let text = std::fs::read_to_string(path)?;
    parse_stab7_text(&text, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::stab7;

    #[test]
    fn roundtrip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let table = stab7(0, 3, 1 << 20).unwrap();
        save_stab7(dir.path(), 0, &table).unwrap();
        let loaded = load_stab7(dir.path(), 0).unwrap();
        assert_eq!(
            table.canonical_lines().collect::<Vec<_>>(),
            loaded.canonical_lines().collect::<Vec<_>>()
        );
        assert_eq!(table.generator_positions(), loaded.generator_positions());
        // saving the loaded table reproduces the file byte-for-byte
        let path = dir.path().join(stab7_cache_filename(0));
        let original = std::fs::read(&path).unwrap();
        save_stab7(dir.path(), 0, &loaded).unwrap();
        assert_eq!(original, std::fs::read(&path).unwrap());
    }

    #[test]
    fn corrupted_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let table = stab7(0, 3, 1 << 20).unwrap();
        save_stab7(dir.path(), 0, &table).unwrap();
        let path = dir.path().join(stab7_cache_filename(0));
        let text = std::fs::read_to_string(&path).unwrap();

        // drop one element line
        let mut lines: Vec<&str> = text.lines().collect();
        lines.remove(lines.len() - 1);
        assert!(parse_stab7_text(&lines.join("\n"), 0).is_err());

        // flip the header index
        let wrong_n = text.replacen("n=0", "n=1", 1);
        assert!(parse_stab7_text(&wrong_n, 0).is_err());
        assert!(parse_stab7_text("", 0).is_err());
    }
}
