//! The `skewlat` text format.
//!
//! ```text
//! skewlat 1          # header: format tag and version
//! n 2                # order
//! zero 0             # optional
//! meet               # n rows of n ids; row = left operand
//! 0 0
//! 1 1
//! join
//! 0 1
//! 0 1
//! labels             # optional: n quoted strings
//! "a" "b"
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment. The header
//! comes first and `n` before any other section; every section appears at
//! most once.

use crate::error::{Error, Result};
use crate::structure::{FiniteSkewLattice, Id};

pub const FORMAT_TAG: &str = "skewlat";
pub const FORMAT_VERSION: u32 = 1;

/// A parsed structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub version: u32,
    pub order: usize,
    pub zero: Option<Id>,
    pub meet: Vec<Vec<Id>>,
    pub join: Vec<Vec<Id>>,
    pub labels: Option<Vec<String>>,
}

impl StructureFile {
    pub fn into_structure(self) -> Result<FiniteSkewLattice> {
        FiniteSkewLattice::from_tables(self.meet, self.join)?
            .with_zero(self.zero)?
            .with_labels(self.labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Token {
    text: String,
    quoted: bool,
    column: usize,
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(number: usize, text: &str) -> Result<Line> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some((_, '"')) => break,
                    Some((_, '\\')) => match chars.next() {
                        Some((_, e @ ('"' | '\\'))) => s.push(e),
                        Some((_, 'n')) => s.push('\n'),
                        Some((j, e)) => {
                            return Err(err(number, j + 1, format!("unknown escape `\\{e}`")))
                        }
                        None => return Err(err(number, i + 1, "unterminated string")),
                    },
                    Some((_, ch)) => s.push(ch),
                    None => return Err(err(number, i + 1, "unterminated string")),
                }
            }
            tokens.push(Token {
                text: s,
                quoted: true,
                column: i + 1,
            });
            continue;
        }
        let mut s = String::new();
        while let Some(&(_, ch)) = chars.peek() {
            if ch.is_whitespace() || ch == '#' || ch == '"' {
                break;
            }
            s.push(ch);
            chars.next();
        }
        tokens.push(Token {
            text: s,
            quoted: false,
            column: i + 1,
        });
    }
    Ok(Line { number, tokens })
}

fn number(line: &Line, tok: &Token) -> Result<usize> {
    if tok.quoted {
        return Err(err(
            line.number,
            tok.column,
            "expected a number, found a string",
        ));
    }
    tok.text.parse().map_err(|_| {
        err(
            line.number,
            tok.column,
            format!("expected a number, found `{}`", tok.text),
        )
    })
}

fn expect_arity(line: &Line, keyword: &str, arity: usize) -> Result<()> {
    if line.tokens.len() != arity + 1 {
        let col = line
            .tokens
            .get(arity + 1)
            .map_or(line.tokens[0].column, |t| t.column);
        return Err(err(
            line.number,
            col,
            format!("`{keyword}` takes {arity} argument(s)"),
        ));
    }
    Ok(())
}

/// Parses a structure file. Range checks cover table entries and the zero.
pub fn parse(input: &str) -> Result<StructureFile> {
    let mut lines = Vec::new();
    for (i, text) in input.lines().enumerate() {
        let line = tokenize(i + 1, text)?;
        if !line.tokens.is_empty() {
            lines.push(line);
        }
    }
    let last_line = input.lines().count().max(1);
    let mut it = lines.into_iter().peekable();

    let header = it.next().ok_or_else(|| err(1, 1, "empty input"))?;
    match header.tokens.as_slice() {
        [tag, version] if !tag.quoted && tag.text == FORMAT_TAG => {
            let v = number(&header, version)?;
            if v as u32 != FORMAT_VERSION {
                return Err(err(
                    header.number,
                    version.column,
                    format!("unsupported version {v}"),
                ));
            }
        }
        _ => {
            return Err(err(
                header.number,
                header.tokens[0].column,
                format!("expected header `{FORMAT_TAG} {FORMAT_VERSION}`"),
            ))
        }
    }

    let mut order: Option<usize> = None;
    let mut zero = None;
    let mut meet = None;
    let mut join = None;
    let mut labels: Option<Vec<String>> = None;

    while let Some(line) = it.next() {
        let head = &line.tokens[0];
        let keyword = head.text.as_str();
        if head.quoted {
            return Err(err(line.number, head.column, "expected a section keyword"));
        }
        let duplicate = match keyword {
            "n" => order.is_some(),
            "zero" => zero.is_some(),
            "meet" => meet.is_some(),
            "join" => join.is_some(),
            "labels" => labels.is_some(),
            other => {
                return Err(err(
                    line.number,
                    head.column,
                    format!("unknown section `{other}`"),
                ));
            }
        };
        if duplicate {
            return Err(err(
                line.number,
                head.column,
                format!("duplicate section `{keyword}`"),
            ));
        }
        if keyword == "n" {
            expect_arity(&line, "n", 1)?;
            let n = number(&line, &line.tokens[1])?;
            if n == 0 {
                return Err(err(
                    line.number,
                    line.tokens[1].column,
                    "order must be positive",
                ));
            }
            order = Some(n);
            continue;
        }
        let n = order
            .ok_or_else(|| err(line.number, head.column, "`n` must precede other sections"))?;
        match keyword {
            "zero" => {
                expect_arity(&line, "zero", 1)?;
                let z = number(&line, &line.tokens[1])?;
                if z >= n {
                    return Err(err(
                        line.number,
                        line.tokens[1].column,
                        format!("zero {z} out of range for order {n}"),
                    ));
                }
                zero = Some(z);
            }
            "meet" | "join" => {
                expect_arity(&line, keyword, 0)?;
                let mut rows = Vec::with_capacity(n);
                for r in 0..n {
                    let row =
                        match it.peek() {
                            Some(l) if !is_keyword(l) => it.next().unwrap(),
                            Some(l) => return Err(err(
                                l.number,
                                1,
                                format!(
                                    "dimension mismatch: `{keyword}` has {r} rows, expected {n}"
                                ),
                            )),
                            None => return Err(err(
                                last_line,
                                1,
                                format!(
                                    "dimension mismatch: `{keyword}` has {r} rows, expected {n}"
                                ),
                            )),
                        };
                    if row.tokens.len() != n {
                        let col = row.tokens.get(n).map_or(1, |t| t.column);
                        return Err(err(
                            row.number,
                            col,
                            format!(
                                "dimension mismatch: row has {} entries, expected {n}",
                                row.tokens.len()
                            ),
                        ));
                    }
                    let mut values = Vec::with_capacity(n);
                    for tok in &row.tokens {
                        let v = number(&row, tok)?;
                        if v >= n {
                            return Err(err(
                                row.number,
                                tok.column,
                                format!("entry {v} out of range for order {n}"),
                            ));
                        }
                        values.push(v);
                    }
                    rows.push(values);
                }
                if keyword == "meet" {
                    meet = Some(rows);
                } else {
                    join = Some(rows);
                }
            }
            "labels" => {
                let mut collected: Vec<String> = Vec::with_capacity(n);
                let mut pending: Vec<(usize, Token)> = line.tokens[1..]
                    .iter()
                    .map(|t| (line.number, t.clone()))
                    .collect();
                while collected.len() + pending.len() < n {
                    match it.peek() {
                        Some(l) if !is_keyword(l) => {
                            let l = it.next().unwrap();
                            pending.extend(l.tokens.into_iter().map(|t| (l.number, t)));
                        }
                        _ => break,
                    }
                }
                for (ln, tok) in pending {
                    if !tok.quoted {
                        return Err(err(ln, tok.column, "labels must be quoted strings"));
                    }
                    if collected.len() == n {
                        return Err(err(ln, tok.column, format!("more than {n} labels")));
                    }
                    collected.push(tok.text);
                }
                if collected.len() != n {
                    return Err(err(
                        line.number,
                        head.column,
                        format!("expected {n} labels, found {}", collected.len()),
                    ));
                }
                labels = Some(collected);
            }
            _ => unreachable!(),
        }
    }

    let order = order.ok_or_else(|| err(last_line, 1, "missing section `n`"))?;
    let meet = meet.ok_or_else(|| err(last_line, 1, "missing section `meet`"))?;
    let join = join.ok_or_else(|| err(last_line, 1, "missing section `join`"))?;
    Ok(StructureFile {
        version: FORMAT_VERSION,
        order,
        zero,
        meet,
        join,
        labels,
    })
}

fn is_keyword(line: &Line) -> bool {
    let t = &line.tokens[0];
    !t.quoted && matches!(t.text.as_str(), "n" | "zero" | "meet" | "join" | "labels")
}

/// Parses and builds the (unvalidated) structure.
pub fn parse_structure(input: &str) -> Result<FiniteSkewLattice> {
    parse(input)?.into_structure()
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Writes `s` in the text format.
pub fn emit(s: &FiniteSkewLattice) -> String {
    let mut out = format!("{FORMAT_TAG} {FORMAT_VERSION}\nn {}\n", s.order());
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero {z}\n"));
    }
    for (name, rows) in [
        ("meet", s.meet_rows().collect::<Vec<_>>()),
        ("join", s.join_rows().collect()),
    ] {
        out.push_str(name);
        out.push('\n');
        for row in rows {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    if let Some(labels) = s.labels() {
        out.push_str("labels\n");
        let quoted: Vec<String> = labels.iter().map(|l| quote(l)).collect();
        out.push_str(&quoted.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const L2: &str = "skewlat 1\nn 2\nmeet\n0 0\n1 1\njoin\n0 1\n0 1\nlabels\n\"a\" \"b\"\n";

    #[test]
    fn round_trip() {
        let s = parse_structure(L2).unwrap();
        assert_eq!(emit(&s), L2);
        assert_eq!(s.labels().unwrap(), &["a".to_string(), "b".to_string()]);
        assert!(s.validate_skew_axioms().verdict);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a comment\n\nskewlat 1 # header\nn 1\nzero 0\nmeet\n0\njoin\n0 # done\n";
        let f = parse(text).unwrap();
        assert_eq!(f.zero, Some(0));
        assert_eq!(f.meet, vec![vec![0]]);
    }

    #[test]
    fn short_row_is_a_dimension_error() {
        let text = "skewlat 1\nn 2\nmeet\n0 0 1\n1 1\njoin\n0 1\n0 1\n";
        let e = parse(text).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 4,
                    column: 5,
                    ..
                }
            ),
            "{e}"
        );
        let text = "skewlat 1\nn 2\nmeet\n0 0\njoin\n0 1\n0 1\n";
        let e = parse(text).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }), "{e}");
    }

    #[test]
    fn range_error() {
        let text = "skewlat 1\nn 3\nmeet\n0 0 0\n0 1 7\n0 0 2\njoin\n0 1 2\n1 1 2\n2 2 2\n";
        let e = parse(text).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 5,
                    column: 5,
                    ..
                }
            ),
            "{e}"
        );
        assert!(e.to_string().contains("out of range"));
    }

    #[test]
    fn duplicate_and_unknown_sections() {
        let text = "skewlat 1\nn 1\nmeet\n0\nmeet\n0\njoin\n0\n";
        assert!(parse(text)
            .unwrap_err()
            .to_string()
            .contains("duplicate section `meet`"));
        let text = "skewlat 1\nn 1\nfoo\n";
        assert!(parse(text)
            .unwrap_err()
            .to_string()
            .contains("unknown section"));
        let text = "skewlat 2\nn 1\n";
        assert!(parse(text)
            .unwrap_err()
            .to_string()
            .contains("unsupported version"));
        let text = "n 1\n";
        assert!(parse(text).is_err());
        let text = "skewlat 1\nmeet\n0\n";
        assert!(parse(text)
            .unwrap_err()
            .to_string()
            .contains("must precede"));
        let text = "skewlat 1\nn 1\nmeet\n0\n";
        assert!(parse(text)
            .unwrap_err()
            .to_string()
            .contains("missing section `join`"));
    }

    #[test]
    fn labels_with_escapes_round_trip() {
        let s = FiniteSkewLattice::from_tables(vec![vec![0]], vec![vec![0]])
            .unwrap()
            .with_labels(Some(vec!["say \"hi\" \\ there".into()]))
            .unwrap();
        let text = emit(&s);
        assert_eq!(parse_structure(&text).unwrap(), s);
    }

    #[test]
    fn labels_may_span_lines() {
        let text = "skewlat 1\nn 2\nmeet\n0 0\n1 1\njoin\n0 1\n0 1\nlabels\n\"a\"\n\"b\"\n";
        assert_eq!(parse(text).unwrap().labels.unwrap().len(), 2);
        let text = "skewlat 1\nn 2\nmeet\n0 0\n1 1\njoin\n0 1\n0 1\nlabels\n\"a\"\n";
        assert!(parse(text).is_err());
    }
}
