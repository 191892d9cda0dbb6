//! Line-oriented text formats.
//!
//! Every format ignores blank lines and lines starting with `c`. The first
//! remaining line is a `p` header.
//!
//! ```text
//! p tco <n_users> <n_topics>          instance
//! a <topic> <k> <u_1> ... <u_k>       one per topic, ascending topic ids
//!
//! s tco <cost>                        overlay solution
//! e <u> <v>                           one per edge, u < v
//!
//! p hs <n_elements> <n_sets>          hitting-set instance
//! s <k> <e_1> ... <e_k>               one per set
//!
//! s hs <cost>                         hitting-set solution
//! v <element>
//!
//! v 1                                 edge codec sidecar
//! x <element> <u> <v>
//! ```

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::charsys::EdgeCodec;
use crate::hitting::HsInstance;
use crate::model::{Edge, Instance, Overlay};

/// Version tag written as the first line of sidecar files.
pub const SIDECAR_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// A non-comment line split into whitespace-separated tokens.
#[derive(Debug, Clone)]
pub struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn tag(&self) -> &'a str {
        self.tokens[0]
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, message)
    }

    /// Parses token `i` as a number.
    pub fn num<T: FromStr>(&self, i: usize) -> Result<T, ParseError> {
        let tok = self
            .tokens
            .get(i)
            .ok_or_else(|| self.error(format!("missing field {i} in `{}` line", self.tag())))?;
        tok.parse()
            .map_err(|_| self.error(format!("`{tok}` is not a valid non-negative integer")))
    }

    /// Parses every token from `start` on as numbers.
    pub fn nums_from<T: FromStr>(&self, start: usize) -> Result<Vec<T>, ParseError> {
        (start..self.tokens.len()).map(|i| self.num(i)).collect()
    }

    pub fn expect_len(&self, n: usize) -> Result<(), ParseError> {
        if self.tokens.len() == n {
            Ok(())
        } else {
            Err(self.error(format!(
                "`{}` line expects {} fields, found {}",
                self.tag(),
                n - 1,
                self.tokens.len() - 1
            )))
        }
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some(Line {
                number: i + 1,
                tokens,
            }),
        }
    })
}

pub(crate) fn last_line_number(text: &str) -> usize {
    text.lines().count().max(1)
}

/// Reads the header line `<tag> <kind> <a> <b>` and returns its line number with `a` and `b`.
pub(crate) fn header<'a>(
    lines: &mut impl Iterator<Item = Line<'a>>,
    text: &str,
    tag: &str,
    kind: &str,
) -> Result<(usize, usize, usize), ParseError> {
    let line = lines.next().ok_or_else(|| {
        ParseError::new(
            last_line_number(text),
            format!("missing `{tag} {kind}` header"),
        )
    })?;
    if line.tag() != tag || line.tokens.get(1) != Some(&kind) {
        return Err(line.error(format!(
            "expected `{tag} {kind}` header, found `{}`",
            line.tokens.join(" ")
        )));
    }
    line.expect_len(4)?;
    Ok((line.number, line.num(2)?, line.num(3)?))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, n_users, n_topics) = header(&mut lines, text, "p", "tco")?;
    let mut audiences: Vec<Vec<usize>> = Vec::with_capacity(n_topics);
    let mut last = header_line;
    for line in lines {
        last = line.number;
        if line.tag() != "a" {
            return Err(line.error(format!("unexpected `{}` line in instance", line.tag())));
        }
        let topic: usize = line.num(1)?;
        if topic != audiences.len() {
            return Err(line.error(format!(
                "expected topic {}, found topic {topic}",
                audiences.len()
            )));
        }
        if topic >= n_topics {
            return Err(line.error(format!(
                "topic {topic} out of range (n_topics = {n_topics})"
            )));
        }
        let k: usize = line.num(2)?;
        let users: Vec<usize> = line.nums_from(3)?;
        if users.len() != k {
            return Err(line.error(format!(
                "topic {topic} declares {k} users but lists {}",
                users.len()
            )));
        }
        if let Some(&u) = users.iter().find(|&&u| u >= n_users) {
            return Err(line.error(format!("user {u} out of range (n_users = {n_users})")));
        }
        audiences.push(users);
    }
    if audiences.len() != n_topics {
        return Err(ParseError::new(
            last,
            format!(
                "expected {n_topics} audience lines, found {}",
                audiences.len()
            ),
        ));
    }
    Instance::new(n_users, audiences).map_err(|e| ParseError::new(header_line, e.to_string()))
}

pub fn emit_instance(instance: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "p tco {} {}", instance.n_users(), instance.n_topics()).unwrap();
    for (t, audience) in instance.audiences().iter().enumerate() {
        write!(out, "a {t} {}", audience.len()).unwrap();
        push_list(&mut out, audience);
        out.push('\n');
    }
    out
}

fn push_list(out: &mut String, items: &[usize]) {
    for x in items {
        write!(out, " {x}").unwrap();
    }
}

pub fn parse_solution(text: &str) -> Result<Overlay, ParseError> {
    let mut lines = content_lines(text);
    let first = lines
        .next()
        .ok_or_else(|| ParseError::new(last_line_number(text), "missing `s tco` header"))?;
    if first.tag() != "s" || first.tokens.get(1) != Some(&"tco") {
        return Err(first.error("expected `s tco <cost>` header"));
    }
    first.expect_len(3)?;
    let cost: usize = first.num(2)?;
    let mut overlay = Overlay::new();
    let mut last = first.number;
    for line in lines {
        last = line.number;
        if line.tag() != "e" {
            return Err(line.error(format!("unexpected `{}` line in solution", line.tag())));
        }
        line.expect_len(3)?;
        let (u, v): (usize, usize) = (line.num(1)?, line.num(2)?);
        let edge =
            Edge::try_new(u, v).ok_or_else(|| line.error(format!("self-loop on user {u}")))?;
        if !overlay.insert(edge) {
            return Err(line.error(format!("duplicate edge {edge}")));
        }
    }
    if overlay.cost() != cost {
        return Err(ParseError::new(
            last,
            format!(
                "header declares cost {cost} but {} edges are listed",
                overlay.cost()
            ),
        ));
    }
    Ok(overlay)
}

pub fn emit_solution(overlay: &Overlay) -> String {
    emit_solution_with_comments(overlay, &[])
}

/// Solution text preceded by `c` comment lines.
pub fn emit_solution_with_comments(overlay: &Overlay, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "s tco {}", overlay.cost()).unwrap();
    for e in overlay {
        writeln!(out, "e {} {}", e.u(), e.v()).unwrap();
    }
    out
}

pub fn parse_hs(text: &str) -> Result<HsInstance, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, n_elements, n_sets) = header(&mut lines, text, "p", "hs")?;
    let mut sets = Vec::with_capacity(n_sets);
    let mut last = header_line;
    for line in lines {
        last = line.number;
        if line.tag() != "s" {
            return Err(line.error(format!(
                "unexpected `{}` line in hitting-set instance",
                line.tag()
            )));
        }
        let k: usize = line.num(1)?;
        let set: Vec<usize> = line.nums_from(2)?;
        if set.len() != k {
            return Err(line.error(format!("set declares {k} elements but lists {}", set.len())));
        }
        if let Some(&e) = set.iter().find(|&&e| e >= n_elements) {
            return Err(line.error(format!(
                "element {e} out of range (n_elements = {n_elements})"
            )));
        }
        sets.push(set);
    }
    if sets.len() != n_sets {
        return Err(ParseError::new(
            last,
            format!("expected {n_sets} sets, found {}", sets.len()),
        ));
    }
    HsInstance::new(n_elements, sets).map_err(|e| ParseError::new(header_line, e.to_string()))
}

pub fn emit_hs(instance: &HsInstance) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p hs {} {}",
        instance.n_elements(),
        instance.sets().len()
    )
    .unwrap();
    for set in instance.sets() {
        write!(out, "s {}", set.len()).unwrap();
        push_list(&mut out, set);
        out.push('\n');
    }
    out
}

pub fn parse_hs_solution(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut lines = content_lines(text);
    let first = lines
        .next()
        .ok_or_else(|| ParseError::new(last_line_number(text), "missing `s hs` header"))?;
    if first.tag() != "s" || first.tokens.get(1) != Some(&"hs") {
        return Err(first.error("expected `s hs <cost>` header"));
    }
    first.expect_len(3)?;
    let cost: usize = first.num(2)?;
    let mut chosen = Vec::new();
    let mut last = first.number;
    for line in lines {
        last = line.number;
        if line.tag() != "v" {
            return Err(line.error(format!(
                "unexpected `{}` line in hitting-set solution",
                line.tag()
            )));
        }
        line.expect_len(2)?;
        chosen.push(line.num(1)?);
    }
    chosen.sort_unstable();
    let before = chosen.len();
    chosen.dedup();
    if chosen.len() != before {
        return Err(ParseError::new(last, "duplicate element in solution"));
    }
    if chosen.len() != cost {
        return Err(ParseError::new(
            last,
            format!(
                "header declares cost {cost} but {} elements are listed",
                chosen.len()
            ),
        ));
    }
    Ok(chosen)
}

pub fn emit_hs_solution(chosen: &[usize]) -> String {
    let mut out = String::new();
    writeln!(out, "s hs {}", chosen.len()).unwrap();
    for e in chosen {
        writeln!(out, "v {e}").unwrap();
    }
    out
}

/// Checks the `v <version>` line that opens a sidecar file.
pub fn expect_sidecar_version<'a>(
    lines: &mut impl Iterator<Item = Line<'a>>,
    text: &str,
) -> Result<usize, ParseError> {
    let line = lines
        .next()
        .ok_or_else(|| ParseError::new(last_line_number(text), "missing `v 1` version line"))?;
    if line.tag() != "v" || line.tokens.len() != 2 {
        return Err(line.error("expected `v <version>` as the first line"));
    }
    if line.tokens[1] != SIDECAR_VERSION {
        return Err(line.error(format!("unsupported sidecar version `{}`", line.tokens[1])));
    }
    Ok(line.number)
}

pub fn parse_codec(text: &str) -> Result<EdgeCodec, ParseError> {
    let mut lines = content_lines(text);
    expect_sidecar_version(&mut lines, text)?;
    let mut edges = Vec::new();
    for line in lines {
        if line.tag() != "x" {
            return Err(line.error(format!("unexpected `{}` line in codec", line.tag())));
        }
        line.expect_len(4)?;
        let id: usize = line.num(1)?;
        if id != edges.len() {
            return Err(line.error(format!("expected element {}, found {id}", edges.len())));
        }
        let (u, v): (usize, usize) = (line.num(2)?, line.num(3)?);
        let edge =
            Edge::try_new(u, v).ok_or_else(|| line.error(format!("self-loop on user {u}")))?;
        if let Some(&prev) = edges.last() {
            if edge <= prev {
                return Err(line.error("codec edges must be strictly increasing"));
            }
        }
        edges.push(edge);
    }
    Ok(EdgeCodec::from_edges(edges))
}

pub fn emit_codec(codec: &EdgeCodec) -> String {
    let mut out = String::new();
    writeln!(out, "v {SIDECAR_VERSION}").unwrap();
    for (i, e) in codec.edges().iter().enumerate() {
        writeln!(out, "x {i} {} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Writes `items` as space-separated values.
pub(crate) struct Joined<'a>(pub &'a [usize]);

impl fmt::Display for Joined<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_topic() {
        let inst = parse_instance("p tco 3 1\na 0 3 0 1 2\n").unwrap();
        assert_eq!(inst.n_users(), 3);
        assert_eq!(inst.n_topics(), 1);
        assert_eq!(inst.audience(0), &[0, 1, 2]);
    }

    #[test]
    fn rejects_out_of_range_user() {
        let err = parse_instance("p tco 2 1\na 0 2 0 5\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("user 5"), "{err}");
    }

    #[test]
    fn instance_errors_carry_line_numbers() {
        let cases = [
            ("", 1, "missing"),
            ("c hi\nq tco 1 1\n", 2, "header"),
            ("p tco 3\n", 1, "expects 3 fields"),
            ("p tco 3 2\na 0 1 0\n", 2, "expected 2 audience"),
            ("p tco 3 2\na 1 1 0\na 0 1 0\n", 2, "expected topic 0"),
            ("p tco 3 1\na 0 2 0\n", 2, "declares 2"),
            ("p tco 3 1\na 0 1 x\n", 2, "not a valid"),
            ("p tco 3 1\na 0 1 -1\n", 2, "not a valid"),
            ("p tco 3 1\n\na 0 1 0\na 1 1 1\n", 4, "out of range"),
            ("p tco 3 1\ne 0 1\n", 2, "unexpected"),
        ];
        for (text, line, needle) in cases {
            let err = parse_instance(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
            assert!(err.message.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn emit_is_canonical() {
        let text = "c example\np tco 4 3\na 0 3 2 0 2\na 1 0\n\na 2 1 3\n";
        let inst = parse_instance(text).unwrap();
        let canon = emit_instance(&inst);
        assert_eq!(canon, "p tco 4 3\na 0 2 0 2\na 1 0\na 2 1 3\n");
        assert_eq!(emit_instance(&parse_instance(&canon).unwrap()), canon);
    }

    #[test]
    fn solution_round_trip() {
        let o: Overlay = [Edge::new(2, 0), Edge::new(1, 2)].into_iter().collect();
        let text = emit_solution_with_comments(&o, &["algo exact".to_string()]);
        assert_eq!(text, "c algo exact\ns tco 2\ne 0 2\ne 1 2\n");
        assert_eq!(parse_solution(&text).unwrap(), o);
    }

    #[test]
    fn solution_errors() {
        assert!(parse_solution("s tco 2\ne 0 1\n")
            .unwrap_err()
            .message
            .contains("cost 2"));
        assert!(parse_solution("s tco 1\ne 1 1\n")
            .unwrap_err()
            .message
            .contains("self-loop"));
        assert!(parse_solution("s tco 2\ne 0 1\ne 1 0\n")
            .unwrap_err()
            .message
            .contains("duplicate"));
        assert!(parse_solution("garbage").is_err());
    }

    #[test]
    fn hs_round_trip() {
        let hs = HsInstance::new(3, vec![vec![0, 1], vec![2], vec![1, 2]]).unwrap();
        let text = emit_hs(&hs);
        assert_eq!(text, "p hs 3 3\ns 2 0 1\ns 1 2\ns 2 1 2\n");
        assert_eq!(parse_hs(&text).unwrap(), hs);
        assert!(parse_hs("p hs 2 1\ns 1 2\n").is_err());
        assert!(parse_hs("p hs 2 2\ns 1 1\n").is_err());
    }

    #[test]
    fn hs_solution_round_trip() {
        let text = emit_hs_solution(&[1, 4]);
        assert_eq!(text, "s hs 2\nv 1\nv 4\n");
        assert_eq!(parse_hs_solution(&text).unwrap(), vec![1, 4]);
        assert!(parse_hs_solution("s hs 1\nv 1\nv 1\n").is_err());
    }

    #[test]
    fn codec_round_trip() {
        let codec = EdgeCodec::from_edges([Edge::new(0, 1), Edge::new(1, 3)]);
        let text = emit_codec(&codec);
        assert_eq!(text, "v 1\nx 0 0 1\nx 1 1 3\n");
        assert_eq!(parse_codec(&text).unwrap(), codec);
        assert!(parse_codec("x 0 0 1\n").is_err());
        assert!(parse_codec("v 2\n").is_err());
        assert!(parse_codec("v 1\nx 0 1 3\nx 1 0 1\n").is_err());
    }

    #[test]
    fn joined_display() {
        assert_eq!(Joined(&[1, 2, 3]).to_string(), "1 2 3");
        assert_eq!(Joined(&[]).to_string(), "");
    }
}
