//! The `.alg` text format.
//!
//! One `key: value` pair per line, `#` starts a comment, vertices are
//! numbered from 1. Paths are dot-separated arrow ids composed left to
//! right, so `a.b` is `a` followed by `b`.
//!
//! ```text
//! name: Auslander algebra of k[x]/(x^2)
//! prime: 101
//! vertices: 2
//! arrow: a: 1 -> 2
//! arrow: b: 2 -> 1
//! relation: a.b = 0
//! cap.nilpotency: 30
//! expect.auslander: true
//! ```
//!
//! Relations are `c1*p1 + c2*p2 + ... = 0` with integer coefficients
//! (omitted coefficients are 1). Caps: `cap.nilpotency`, `cap.resolution`,
//! `cap.domdim`, `cap.catalog`. `expect.<invariant>` lines declare values
//! the suite compares against: `dim`, `gldim`, `domdim`, `catalog`,
//! `selfinjective`, `gorenstein`, `1ag`, `auslander`, `tilted`.

use std::collections::BTreeMap;

use agtilt::{Algebra, Arrow, PrimeField, Quiver, Relation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Caps {
    pub nilpotency: Option<usize>,
    pub resolution: Option<usize>,
    pub domdim: Option<usize>,
    pub catalog: Option<usize>,
}

pub const EXPECT_KEYS: [&str; 9] = [
    "dim",
    "gldim",
    "domdim",
    "catalog",
    "selfinjective",
    "gorenstein",
    "1ag",
    "auslander",
    "tilted",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub prime: Option<u32>,
    pub vertices: usize,
    /// 0-indexed endpoints.
    pub arrows: Vec<Arrow>,
    /// Signed coefficients and arrow indices, one entry per relation.
    pub relations: Vec<Vec<(i64, Vec<usize>)>>,
    pub caps: Caps,
    pub expect: BTreeMap<String, String>,
}

impl AlgebraFile {
    pub fn build(&self, prime: u32, nilpotency_cap: usize) -> Result<Algebra, agtilt::Error> {
        let field = PrimeField::new(prime)?;
        let quiver = Quiver::new(self.vertices, self.arrows.clone())?;
        let relations = self
            .relations
            .iter()
            .map(|terms| {
                Relation::new(terms.iter().map(|(c, p)| (field.from_i64(*c), p.clone())).collect())
            })
            .collect();
        Algebra::build(quiver, relations, field, nilpotency_cap)
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

struct Pending {
    line: usize,
    column: usize,
    text: String,
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut name = None;
    let mut prime = None;
    let mut vertices: Option<usize> = None;
    let mut arrow_lines = Vec::new();
    let mut relation_lines = Vec::new();
    let mut caps = Caps::default();
    let mut expect = BTreeMap::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(err(line, 1, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let key_col = content.find(key).unwrap_or(0) + 1;
        let value_start = colon + 1 + (content[colon + 1..].len() - content[colon + 1..].trim_start().len());
        let value = content[colon + 1..].trim();
        let value_col = value_start + 1;
        let pending = Pending {
            line,
            column: value_col,
            text: value.to_string(),
        };
        let repeatable = key == "arrow" || key == "relation";
        if !repeatable {
            if let Some(prev) = seen.insert(key.to_string(), line) {
                return Err(err(line, key_col, format!("duplicate key `{key}` (first on line {prev})")));
            }
        }
        match key {
            "name" => name = Some(value.to_string()),
            "prime" => prime = Some(parse_number::<u32>(&pending)?),
            "vertices" => {
                let n = parse_number::<usize>(&pending)?;
                if n == 0 {
                    return Err(err(line, value_col, "an algebra needs at least one vertex"));
                }
                vertices = Some(n);
            }
            "arrow" => arrow_lines.push(pending),
            "relation" => relation_lines.push(pending),
            "cap.nilpotency" => caps.nilpotency = Some(parse_number(&pending)?),
            "cap.resolution" => caps.resolution = Some(parse_number(&pending)?),
            "cap.domdim" => caps.domdim = Some(parse_number(&pending)?),
            "cap.catalog" => caps.catalog = Some(parse_number(&pending)?),
            _ => match key.strip_prefix("expect.") {
                Some(k) if EXPECT_KEYS.contains(&k) => {
                    check_expect_value(k, &pending)?;
                    expect.insert(k.to_string(), value.to_string());
                }
                _ => return Err(err(line, key_col, format!("unknown key `{key}`"))),
            },
        }
    }

    let Some(vertices) = vertices else {
        return Err(err(1, 1, "missing `vertices`"));
    };
    let mut arrows: Vec<Arrow> = Vec::new();
    for p in &arrow_lines {
        let a = parse_arrow(p, vertices)?;
        if arrows.iter().any(|b| b.name == a.name) {
            return Err(err(p.line, p.column, format!("duplicate arrow id `{}`", a.name)));
        }
        arrows.push(a);
    }
    let relations = relation_lines
        .iter()
        .map(|p| parse_relation(p, &arrows))
        .collect::<Result<_, _>>()?;
    Ok(AlgebraFile {
        name,
        prime,
        vertices,
        arrows,
        relations,
        caps,
        expect,
    })
}

fn parse_number<T: std::str::FromStr>(p: &Pending) -> Result<T, ParseError> {
    p.text
        .parse()
        .map_err(|_| err(p.line, p.column, format!("expected a non-negative integer, found `{}`", p.text)))
}

fn check_expect_value(key: &str, p: &Pending) -> Result<(), ParseError> {
    let ok = match key {
        "selfinjective" | "gorenstein" | "1ag" | "auslander" | "tilted" => {
            p.text == "true" || p.text == "false"
        }
        "gldim" | "domdim" => p.text == "inf" || p.text.parse::<usize>().is_ok(),
        _ => p.text.parse::<usize>().is_ok(),
    };
    if ok {
        Ok(())
    } else {
        Err(err(p.line, p.column, format!("bad value `{}` for expect.{key}", p.text)))
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn parse_arrow(p: &Pending, vertices: usize) -> Result<Arrow, ParseError> {
    let s = &p.text;
    let Some(colon) = s.find(':') else {
        return Err(err(p.line, p.column, "expected `id: source -> target`"));
    };
    let id = s[..colon].trim();
    if id.is_empty() || !id.chars().all(is_ident_char) {
        return Err(err(p.line, p.column, format!("bad arrow id `{id}`")));
    }
    let rest = &s[colon + 1..];
    let Some(arrow_pos) = rest.find("->") else {
        return Err(err(p.line, p.column + colon + 1, "expected `source -> target`"));
    };
    let mut ends = [0usize; 2];
    for (k, (part, offset)) in [(&rest[..arrow_pos], colon + 1), (&rest[arrow_pos + 2..], colon + 3 + arrow_pos)]
        .into_iter()
        .enumerate()
    {
        let t = part.trim();
        let col = p.column + offset + part.find(t).unwrap_or(0);
        let v: usize = t
            .parse()
            .map_err(|_| err(p.line, col, format!("expected a vertex number, found `{t}`")))?;
        if v == 0 || v > vertices {
            return Err(err(p.line, col, format!("vertex {v} outside 1..={vertices}")));
        }
        ends[k] = v - 1;
    }
    Ok(Arrow::new(id, ends[0], ends[1]))
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    p: &'a Pending,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.p.column + self.pos
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        err(self.p.line, self.column(), message)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && f(self.chars[self.pos]) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

fn parse_relation(p: &Pending, arrows: &[Arrow]) -> Result<Vec<(i64, Vec<usize>)>, ParseError> {
    let mut sc = Scanner {
        chars: p.text.chars().collect(),
        pos: 0,
        p,
    };
    let mut terms = Vec::new();
    let mut endpoints: Option<(usize, usize)> = None;
    let mut sign = 1i64;
    if sc.peek() == Some('-') {
        sign = -1;
        sc.pos += 1;
    }
    loop {
        sc.skip_ws();
        let mut coeff = 1i64;
        if sc.peek().is_some_and(|c| c.is_ascii_digit()) {
            let col = sc.column();
            let digits = sc.take_while(|c| c.is_ascii_digit());
            coeff = digits.parse().map_err(|_| err(p.line, col, "coefficient too large"))?;
            if sc.peek() != Some('*') {
                return Err(sc.error("expected `*` after a coefficient"));
            }
            sc.pos += 1;
        }
        let path_col = {
            sc.skip_ws();
            sc.column()
        };
        let mut path = Vec::new();
        loop {
            sc.skip_ws();
            let col = sc.column();
            let id = sc.take_while(is_ident_char);
            if id.is_empty() {
                return Err(err(p.line, col, "expected an arrow id"));
            }
            let Some(ai) = arrows.iter().position(|a| a.name == id) else {
                return Err(err(p.line, col, format!("unknown arrow `{id}`")));
            };
            if let Some(&last) = path.last() {
                let prev: &Arrow = &arrows[last];
                if prev.target != arrows[ai].source {
                    return Err(err(
                        p.line,
                        col,
                        format!("`{}` does not start where `{}` ends", id, prev.name),
                    ));
                }
            }
            path.push(ai);
            if sc.peek() == Some('.') {
                sc.pos += 1;
            } else {
                break;
            }
        }
        let ends = (arrows[path[0]].source, arrows[*path.last().unwrap()].target);
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e != ends => {
                return Err(err(p.line, path_col, "all paths in a relation must share source and target"));
            }
            _ => {}
        }
        terms.push((sign * coeff, path));
        match sc.peek() {
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            Some('=') => break,
            Some(c) => return Err(sc.error(format!("unexpected `{c}`"))),
            None => return Err(sc.error("expected `= 0`")),
        }
        sc.pos += 1;
    }
    sc.pos += 1;
    sc.skip_ws();
    let rest = sc.take_while(|_| true);
    if rest.trim() != "0" {
        return Err(sc.error("a relation must end in `= 0`"));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file_is_semisimple() {
        let f = parse_algebra_file("vertices: 1\n").unwrap();
        let alg = f.build(101, 30).unwrap();
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn a2_has_dimension_three() {
        let f = parse_algebra_file("vertices: 2\narrow: a: 1 -> 2\n").unwrap();
        assert_eq!(f.arrows[0].source, 0);
        assert_eq!(f.build(101, 30).unwrap().dim(), 3);
    }

    #[test]
    fn relations_with_coefficients() {
        let text = "vertices: 4\narrow: a: 1 -> 2\narrow: b: 2 -> 4\narrow: c: 1 -> 3\narrow: d: 3 -> 4\nrelation: 2*a.b - 2*c.d = 0 # square\n";
        let f = parse_algebra_file(text).unwrap();
        assert_eq!(f.relations, vec![vec![(2, vec![0, 1]), (-2, vec![2, 3])]]);
        assert_eq!(f.build(101, 30).unwrap().dim(), 9);
    }

    #[test]
    fn diagnostics_carry_positions() {
        let e = parse_algebra_file("vertices: 2\narrow: a: 1 -> 2\nrelation: a.z = 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 13));
        assert!(e.message.contains("unknown arrow"));

        let e = parse_algebra_file("vertices: 2\ncolour: red\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));

        let e = parse_algebra_file("vertices: 2\narrow: a: 1 -> 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (3 - 1, 16));

        let e = parse_algebra_file("vertices: 2\narrow: a: 1 -> 2\narrow: b: 1 -> 2\nrelation: a.b = 0\n").unwrap_err();
        assert!(e.message.contains("does not start"));

        let e = parse_algebra_file("vertices: 1\nvertices: 1\n").unwrap_err();
        assert_eq!(e.line, 2);

        assert!(parse_algebra_file("arrow: a: 1 -> 1\n").is_err());
        assert!(parse_algebra_file("vertices: 1\nexpect.tilted: maybe\n").is_err());
    }

    #[test]
    fn non_admissible_input_is_rejected_at_build() {
        let f = parse_algebra_file("vertices: 1\narrow: x: 1 -> 1\n").unwrap();
        assert!(matches!(f.build(101, 30), Err(agtilt::Error::NotAdmissible(_))));
    }
}
