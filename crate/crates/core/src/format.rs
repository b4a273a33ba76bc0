//! Plain-text file formats.
//!
//! Array file:
//! ```text
//! oa v1
//! N n
//! s_1 … s_n
//! N lines of n symbols
//! ```
//! Partition file: `partition v1`, then `K k0`, then K lines of 0-based row indices.
//! Generator file: `gen v1`, then `s k n`, then the k rows of the generator matrix.
//!
//! Tokens are separated by single spaces and every line ends with `\n`.

use std::fmt::Write;

use crate::array::{OrthogonalArray, OrthogonalPartition, Symbol};
use crate::construct::GeneratorColumns;
use crate::error::{Error, Result};
use crate::gf::Elem;

pub const OA_HEADER: &str = "oa v1";
pub const PARTITION_HEADER: &str = "partition v1";
pub const GENERATOR_HEADER: &str = "gen v1";

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_oa(a: &OrthogonalArray) -> String {
    let mut out = String::with_capacity(a.data().len() * 3 + 64);
    out.push_str(OA_HEADER);
    out.push('\n');
    let _ = writeln!(out, "{} {}", a.runs(), a.cols());
    let _ = writeln!(out, "{}", join(a.levels()));
    for row in a.rows() {
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_partition(p: &OrthogonalPartition) -> String {
    let mut out = format!("{PARTITION_HEADER}\n{} {}\n", p.block_count(), p.strength);
    for b in &p.blocks {
        let _ = writeln!(out, "{}", join(b));
    }
    out
}

pub fn write_generator(g: &GeneratorColumns) -> String {
    let mut out = format!(
        "{GENERATOR_HEADER}\n{} {} {}\n",
        g.order(),
        g.dimension(),
        g.len()
    );
    for i in 0..g.dimension() {
        let _ = writeln!(out, "{}", join(g.columns().iter().map(|c| c[i])));
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next line with its 1-based number; errors at end of input.
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => Ok((i + 1, l.trim_end())),
            None => Err(Error::parse(0, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn numbers<T: std::str::FromStr>(&mut self, what: &str) -> Result<(usize, Vec<T>)> {
        let (no, line) = self.next(what)?;
        let vals = line
            .split_whitespace()
            .map(|t| {
                t.parse::<T>()
                    .map_err(|_| Error::parse(no, format!("`{t}` is not a valid {what} value")))
            })
            .collect::<Result<Vec<T>>>()?;
        Ok((no, vals))
    }

    fn header(&mut self, expected: &str) -> Result<()> {
        let (no, line) = self.next(expected)?;
        if line != expected {
            return Err(Error::parse(no, format!("expected `{expected}`, found `{line}`")));
        }
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.find(|(_, l)| !l.trim().is_empty()) {
            Some((i, _)) => Err(Error::parse(i + 1, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn expect_len<T>(no: usize, v: &[T], n: usize, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::parse(no, format!("expected {n} {what}, found {}", v.len())));
    }
    Ok(())
}

pub fn parse_oa(text: &str) -> Result<OrthogonalArray> {
    let mut lines = Lines::new(text);
    lines.header(OA_HEADER)?;
    let (no, dims) = lines.numbers::<usize>("dimension")?;
    expect_len(no, &dims, 2, "dimensions (N n)")?;
    let (runs, cols) = (dims[0], dims[1]);
    let (no, levels) = lines.numbers::<u32>("level")?;
    expect_len(no, &levels, cols, "level counts")?;
    let mut data = Vec::with_capacity(runs * cols);
    for _ in 0..runs {
        let (no, row) = lines.numbers::<Symbol>("symbol")?;
        expect_len(no, &row, cols, "symbols")?;
        data.extend(row);
    }
    lines.finish()?;
    OrthogonalArray::new(levels, data)
}

pub fn parse_partition(text: &str) -> Result<OrthogonalPartition> {
    let mut lines = Lines::new(text);
    lines.header(PARTITION_HEADER)?;
    let (no, head) = lines.numbers::<usize>("count")?;
    expect_len(no, &head, 2, "values (K k0)")?;
    let blocks = (0..head[0])
        .map(|_| lines.numbers::<usize>("row index").map(|(_, b)| b))
        .collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    Ok(OrthogonalPartition {
        blocks,
        strength: head[1],
    })
}

pub fn parse_generator(text: &str) -> Result<GeneratorColumns> {
    let mut lines = Lines::new(text);
    lines.header(GENERATOR_HEADER)?;
    let (no, head) = lines.numbers::<usize>("size")?;
    expect_len(no, &head, 3, "values (s k n)")?;
    let (s, k, n) = (head[0], head[1], head[2]);
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (no, row) = lines.numbers::<Elem>("field element")?;
        expect_len(no, &row, n, "entries")?;
        rows.push(row);
    }
    lines.finish()?;
    let s = u32::try_from(s).map_err(|_| Error::parse(2, "field order too large"))?;
    GeneratorColumns::from_generator_rows(s, n, &rows)
}

/// Input accepted by commands that read either an array or a generator.
pub enum Document {
    Array(OrthogonalArray),
    Generator(GeneratorColumns),
}

pub fn parse_document(text: &str) -> Result<Document> {
    match text.lines().next().map(str::trim_end) {
        Some(OA_HEADER) => parse_oa(text).map(Document::Array),
        Some(GENERATOR_HEADER) => parse_generator(text).map(Document::Generator),
        other => Err(Error::parse(
            1,
            format!(
                "expected `{OA_HEADER}` or `{GENERATOR_HEADER}`, found `{}`",
                other.unwrap_or("")
            ),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{fold_mod2, linear_oa, vandermonde_columns};
    use proptest::prelude::*;

    #[test]
    fn exact_layout() {
        let a = OrthogonalArray::from_rows(vec![2, 3], &[vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(write_oa(&a), "oa v1\n2 2\n2 3\n0 2\n1 0\n");
        let p = OrthogonalPartition {
            blocks: vec![vec![0, 3], vec![1, 2]],
            strength: 1,
        };
        assert_eq!(write_partition(&p), "partition v1\n2 1\n0 3\n1 2\n");
        let g = vandermonde_columns(3, 2, 3).unwrap();
        assert_eq!(write_generator(&g), "gen v1\n3 2 3\n1 1 1\n0 1 2\n");
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_oa("oa v1\n2 2\n2 2\n0 1\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");
        assert!(matches!(parse_oa("oa v2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_oa("oa v1\n1 1\n2\nx\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_oa("oa v1\n1 1\n2\n0\n1\n"), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(parse_oa("oa v1\n1 1\n2\n2\n"), Err(Error::InvalidInput(_))));
        assert!(parse_partition("partition v1\n2 0\n0\n").is_err());
        assert!(parse_document("hello\n").is_err());
    }

    #[test]
    fn generator_round_trip() {
        let g = vandermonde_columns(4, 3, 5).unwrap();
        let back = parse_generator(&write_generator(&g)).unwrap();
        assert_eq!(back.columns(), g.columns());
        assert!(matches!(parse_document(&write_generator(&g)).unwrap(), Document::Generator(_)));
    }

    #[test]
    fn folded_array_round_trip() {
        let a = fold_mod2(&linear_oa(&vandermonde_columns(4, 2, 5).unwrap()).unwrap(), 4).unwrap();
        let back = parse_oa(&write_oa(&a)).unwrap();
        assert_eq!(back.levels(), a.levels());
        assert_eq!(back.data(), a.data());
    }

    proptest! {
        #[test]
        fn arrays_round_trip(levels in prop::collection::vec(2u32..40, 1..6), seed in any::<u64>(), runs in 0usize..20) {
            let mut x = seed;
            let mut data = Vec::new();
            for _ in 0..runs {
                for &s in &levels {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    data.push(((x >> 33) % s as u64) as Symbol);
                }
            }
            let a = OrthogonalArray::new(levels, data).unwrap();
            let text = write_oa(&a);
            let back = parse_oa(&text).unwrap();
            prop_assert_eq!(back.data(), a.data());
            prop_assert_eq!(write_oa(&back), text);
        }

        #[test]
        fn partitions_round_trip(blocks in prop::collection::vec(prop::collection::vec(0usize..1000, 1..8), 1..6), k0 in 0usize..5) {
            let p = OrthogonalPartition { blocks, strength: k0 };
            prop_assert_eq!(parse_partition(&write_partition(&p)).unwrap(), p);
        }
    }
}
