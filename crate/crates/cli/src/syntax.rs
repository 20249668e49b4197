//! Text syntax for morphism words, cell and sphere literals, and complex
//! files. The grammar is documented in `docs/complex-format.md`.

use std::fmt::Write as _;

use aufhebung_core::bounds::Bounded;
use aufhebung_core::complex::{Cell, SkeletalComplex};
use aufhebung_core::filler::Sphere;
use aufhebung_core::shape::{
    word_dom_for_cod, Cube, CubeGen, Cyclic, CyclicGen, Globe, GlobeGen, Shape, ShapeKind, Simplex,
    SimplexGen,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl SyntaxError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Self {
            line,
            col,
            msg: msg.into(),
        }
    }
}

/// Shapes whose generators have a textual spelling.
pub trait TextShape: Bounded {
    fn parse_gen(tok: &str) -> Option<Self::Gen>;
}

fn index(tok: &str, prefix: &str) -> Option<u8> {
    let rest = tok.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

impl TextShape for Simplex {
    fn parse_gen(tok: &str) -> Option<SimplexGen> {
        index(tok, "d")
            .map(SimplexGen::Face)
            .or_else(|| index(tok, "s").map(SimplexGen::Degen))
    }
}

impl TextShape for Cube {
    fn parse_gen(tok: &str) -> Option<CubeGen> {
        if let Some(rest) = tok.strip_prefix('a') {
            let (sign, i) = rest.split_once('@')?;
            let sign = match sign {
                "0" => 0,
                "1" => 1,
                _ => return None,
            };
            let i = index(i, "")?;
            return (i >= 1).then_some(CubeGen::Face(i, sign));
        }
        index(tok, "b").filter(|&j| j >= 1).map(CubeGen::Degen)
    }
}

impl TextShape for Globe {
    fn parse_gen(tok: &str) -> Option<GlobeGen> {
        match tok {
            "sig" => Some(GlobeGen::Src),
            "tau" => Some(GlobeGen::Tgt),
            "iot" => Some(GlobeGen::Refl),
            _ => None,
        }
    }
}

impl TextShape for Cyclic {
    fn parse_gen(tok: &str) -> Option<CyclicGen> {
        if tok == "t" {
            return Some(CyclicGen::Rot);
        }
        if let Some(n) = tok.strip_suffix('x') {
            return index(n, "s").map(CyclicGen::Extra);
        }
        index(tok, "d")
            .map(CyclicGen::Face)
            .or_else(|| index(tok, "s").map(CyclicGen::Degen))
    }
}

/// Whitespace-separated tokens with their 1-based columns, offset by `col0`.
fn tokens(text: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((col0 + s, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((col0 + s, &text[s..]));
    }
    out
}

/// A word in functional order; `id` and the empty string are the empty word.
pub fn parse_word<S: TextShape>(
    text: &str,
    line: usize,
    col0: usize,
) -> Result<Vec<S::Gen>, SyntaxError> {
    let toks = tokens(text, col0);
    if let [(_, "id")] = toks.as_slice() {
        return Ok(Vec::new());
    }
    toks.into_iter()
        .map(|(col, tok)| {
            S::parse_gen(tok).ok_or_else(|| {
                SyntaxError::new(line, col, format!("unknown {} generator `{tok}`", S::KIND))
            })
        })
        .collect()
}

fn valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '\'' | '~' | '.' | '-'))
}

/// `x` or `x[word]`, resolved against the generators of `x`.
pub fn parse_cell<S: TextShape>(
    x: &SkeletalComplex<S>,
    text: &str,
    line: usize,
    col: usize,
) -> Result<Cell<S>, SyntaxError> {
    let (id, word) = match text.find('[') {
        Some(open) => {
            let Some(inner) = text[open + 1..].strip_suffix(']') else {
                return Err(SyntaxError::new(
                    line,
                    col + open,
                    "unclosed `[` in cell literal",
                ));
            };
            (&text[..open], Some((inner, col + open + 1)))
        }
        None => (text, None),
    };
    if !valid_id(id) {
        return Err(SyntaxError::new(
            line,
            col,
            format!("invalid generator id `{id}`"),
        ));
    }
    let gen = x
        .lookup(id)
        .ok_or_else(|| SyntaxError::new(line, col, format!("unknown generator `{id}`")))?;
    let dim = x.generator(gen).dim;
    let word = match word {
        Some((w, wcol)) => parse_word::<S>(w, line, wcol)?,
        None => Vec::new(),
    };
    let err =
        |e: &dyn std::fmt::Display| SyntaxError::new(line, col, format!("cell `{text}`: {e}"));
    let dom = word_dom_for_cod::<S>(dim, &word).map_err(|e| err(&e))?;
    let epi = S::normalize(dom, &word).map_err(|e| err(&e))?;
    if !S::is_epi(&epi) {
        return Err(err(&format!("`{epi}` is not an epimorphism")));
    }
    x.cell(gen, epi).map_err(|e| err(&e))
}

/// Cell literals separated by whitespace; brackets group their contents.
fn cell_tokens(text: &str, col0: usize, line: usize) -> Result<Vec<(usize, &str)>, SyntaxError> {
    let mut out = Vec::new();
    let mut start = None;
    let mut depth = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                start.get_or_insert(i);
            }
            ']' => {
                if depth == 0 {
                    return Err(SyntaxError::new(line, col0 + i, "unmatched `]`"));
                }
                depth -= 1;
            }
            c if c.is_whitespace() && depth == 0 => {
                if let Some(s) = start.take() {
                    out.push((col0 + s, &text[s..i]));
                }
            }
            _ => {
                start.get_or_insert(i);
            }
        }
    }
    if depth > 0 {
        return Err(SyntaxError::new(line, col0 + text.len(), "unclosed `[`"));
    }
    if let Some(s) = start {
        out.push((col0 + s, &text[s..]));
    }
    Ok(out)
}

/// Comma-separated cell literals in face listing order.
pub fn parse_sphere<S: TextShape>(
    x: &SkeletalComplex<S>,
    text: &str,
    line: usize,
    col0: usize,
) -> Result<Sphere<S>, SyntaxError> {
    let mut faces = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let toks = cell_tokens(part, col0 + offset, line)?;
        match toks.as_slice() {
            [(col, lit)] => faces.push(parse_cell(x, lit, line, *col)?),
            [] => {
                return Err(SyntaxError::new(
                    line,
                    col0 + offset,
                    "empty face in sphere literal",
                ))
            }
            [_, (col, _), ..] => {
                return Err(SyntaxError::new(
                    line,
                    *col,
                    "expected `,` between sphere faces",
                ))
            }
        }
        offset += part.len() + 1;
    }
    let dim = faces[0].dim();
    if let Some(bad) = faces.iter().position(|c| c.dim() != dim) {
        return Err(SyntaxError::new(
            line,
            col0,
            format!(
                "face {bad} has dimension {}, expected {dim}",
                faces[bad].dim()
            ),
        ));
    }
    let k = dim + 1;
    if faces.len() != S::face_count(k) {
        return Err(SyntaxError::new(
            line,
            col0,
            format!(
                "a {k}-sphere has {} faces, got {}",
                S::face_count(k),
                faces.len()
            ),
        ));
    }
    Ok(Sphere::new(k, faces))
}

/// A parsed complex file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexFile<S: Shape> {
    pub complex: SkeletalComplex<S>,
    /// The designated sphere, when the file names one.
    pub sphere: Option<Sphere<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Simplicial(ComplexFile<Simplex>),
    Cubical(ComplexFile<Cube>),
    Globular(ComplexFile<Globe>),
    Cyclic(ComplexFile<Cyclic>),
}

impl Document {
    pub fn shape(&self) -> ShapeKind {
        match self {
            Document::Simplicial(_) => ShapeKind::Simplicial,
            Document::Cubical(_) => ShapeKind::Cubical,
            Document::Globular(_) => ShapeKind::Globular,
            Document::Cyclic(_) => ShapeKind::Cyclic,
        }
    }
}

/// Non-blank lines with comments stripped: `(line number, first column, text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col = body.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some((i + 1, col, trimmed))
    })
}

fn number(tok: Option<&(usize, &str)>, line: usize, what: &str) -> Result<usize, SyntaxError> {
    match tok {
        Some((col, t)) => t.parse().map_err(|_| {
            SyntaxError::new(
                line,
                *col,
                format!("expected a number for {what}, got `{t}`"),
            )
        }),
        None => Err(SyntaxError::new(line, 1, format!("missing {what}"))),
    }
}

fn parse_body<S: TextShape>(
    lines: &[(usize, usize, &str)],
    skeletal: usize,
    truncation: Option<usize>,
    header_line: usize,
) -> Result<ComplexFile<S>, SyntaxError> {
    let truncation = truncation.unwrap_or(2 * skeletal + 2);
    let mut x: SkeletalComplex<S> = SkeletalComplex::new(skeletal, truncation)
        .map_err(|e| SyntaxError::new(header_line, 1, e.to_string()))?;
    let mut sphere = None;
    for &(line, col, text) in lines {
        let (kw, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest_col = col + text.len() - rest.len();
        match kw {
            "gen" => {
                if sphere.is_some() {
                    return Err(SyntaxError::new(
                        line,
                        col,
                        "generators must come before the sphere",
                    ));
                }
                let split = tokens(rest, 0)
                    .into_iter()
                    .find(|&(_, t)| t == "faces")
                    .map(|(p, _)| p);
                let (head, faces_text) = match split {
                    Some(p) => (
                        &rest[..p],
                        Some((&rest[p + "faces".len()..], rest_col + p + "faces".len())),
                    ),
                    None => (rest, None),
                };
                let toks = tokens(head, rest_col);
                let (id_col, id) = match toks.first() {
                    Some(&(c, t)) if valid_id(t) => (c, t),
                    Some(&(c, t)) => {
                        return Err(SyntaxError::new(
                            line,
                            c,
                            format!("invalid generator id `{t}`"),
                        ))
                    }
                    None => return Err(SyntaxError::new(line, col, "missing generator id")),
                };
                match toks.get(1) {
                    Some((_, "dim")) => {}
                    Some(&(c, t)) => {
                        return Err(SyntaxError::new(
                            line,
                            c,
                            format!("expected `dim`, got `{t}`"),
                        ))
                    }
                    None => return Err(SyntaxError::new(line, col, "missing `dim`")),
                }
                let dim = number(toks.get(2), line, "dim")?;
                if let Some(&(c, t)) = toks.get(3) {
                    return Err(SyntaxError::new(line, c, format!("unexpected `{t}`")));
                }
                let mut faces = Vec::new();
                if let Some((ft, fcol)) = faces_text {
                    for (c, lit) in cell_tokens(ft, fcol, line)? {
                        faces.push(parse_cell(&x, lit, line, c)?);
                    }
                }
                let arity = if dim == 0 { 0 } else { S::face_count(dim) };
                if faces.len() != arity {
                    return Err(SyntaxError::new(
                        line,
                        id_col,
                        format!(
                            "generator `{id}` of dim {dim} needs {arity} faces, got {}",
                            faces.len()
                        ),
                    ));
                }
                x.add_generator(id, dim, faces)
                    .map_err(|e| SyntaxError::new(line, id_col, e.to_string()))?;
            }
            "sphere" => {
                if sphere.is_some() {
                    return Err(SyntaxError::new(line, col, "more than one sphere"));
                }
                sphere = Some(parse_sphere(&x, rest, line, rest_col)?);
            }
            "shape" | "skeletal" | "truncate" => {
                return Err(SyntaxError::new(
                    line,
                    col,
                    format!("`{kw}` must come before the generators"),
                ));
            }
            other => {
                return Err(SyntaxError::new(
                    line,
                    col,
                    format!("unknown keyword `{other}`"),
                ))
            }
        }
    }
    Ok(ComplexFile { complex: x, sphere })
}

/// Parses a complex file: `shape`, `skeletal` and optional `truncate`
/// headers, then `gen` lines, then at most one `sphere` line.
pub fn parse_document(text: &str) -> Result<Document, SyntaxError> {
    let lines: Vec<_> = content_lines(text).collect();
    let mut shape = None;
    let mut skeletal = None;
    let mut truncation = None;
    let mut body = 0;
    let mut header_line = 1;
    for &(line, col, t) in &lines {
        let toks = tokens(t, col);
        let value = |what| -> Result<&(usize, &str), SyntaxError> {
            if toks.len() > 2 {
                return Err(SyntaxError::new(
                    line,
                    toks[2].0,
                    format!("unexpected `{}`", toks[2].1),
                ));
            }
            toks.get(1)
                .ok_or_else(|| SyntaxError::new(line, col, format!("missing {what}")))
        };
        match toks[0].1 {
            "shape" => {
                if shape.is_some() {
                    return Err(SyntaxError::new(line, col, "duplicate `shape`"));
                }
                let &(c, name) = value("shape name")?;
                shape =
                    Some(name.parse::<ShapeKind>().map_err(|_| {
                        SyntaxError::new(line, c, format!("unknown shape `{name}`"))
                    })?);
            }
            "skeletal" => {
                if skeletal.is_some() {
                    return Err(SyntaxError::new(line, col, "duplicate `skeletal`"));
                }
                skeletal = Some(number(
                    Some(value("skeletal level")?),
                    line,
                    "skeletal level",
                )?);
            }
            "truncate" => {
                if truncation.is_some() {
                    return Err(SyntaxError::new(line, col, "duplicate `truncate`"));
                }
                truncation = Some(number(Some(value("truncation")?), line, "truncation")?);
            }
            _ => break,
        }
        header_line = line;
        body += 1;
    }
    let shape = shape.ok_or_else(|| SyntaxError::new(header_line, 1, "missing `shape` header"))?;
    let skeletal =
        skeletal.ok_or_else(|| SyntaxError::new(header_line, 1, "missing `skeletal` header"))?;
    let rest = &lines[body..];
    Ok(match shape {
        ShapeKind::Simplicial => {
            Document::Simplicial(parse_body(rest, skeletal, truncation, header_line)?)
        }
        ShapeKind::Cubical => {
            Document::Cubical(parse_body(rest, skeletal, truncation, header_line)?)
        }
        ShapeKind::Globular => {
            Document::Globular(parse_body(rest, skeletal, truncation, header_line)?)
        }
        ShapeKind::Cyclic => Document::Cyclic(parse_body(rest, skeletal, truncation, header_line)?),
    })
}

/// Prints a complex (and optionally a designated sphere) in the file format.
pub fn print_complex<S: Shape>(x: &SkeletalComplex<S>, sphere: Option<&Sphere<S>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "shape {}", S::KIND);
    let _ = writeln!(out, "skeletal {}", x.skeletal_level());
    let _ = writeln!(out, "truncate {}", x.truncation());
    for g in x.generators() {
        let _ = write!(out, "gen {} dim {}", g.id, g.dim);
        if !g.faces.is_empty() {
            out.push_str(" faces");
            for c in &g.faces {
                let _ = write!(out, " {}", x.cell_literal(c));
            }
        }
        out.push('\n');
    }
    if let Some(s) = sphere {
        let _ = writeln!(out, "sphere {}", s.literal(x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use aufhebung_core::bounds::{
        cubical_counterexample, cyclic_counterexample, simplicial_counterexample,
    };
    use aufhebung_core::shape::CubeMorphism;

    #[test]
    fn words_parse_per_shape() {
        assert_eq!(
            parse_word::<Simplex>("d0 d1 s2", 1, 1).unwrap(),
            vec![
                SimplexGen::Face(0),
                SimplexGen::Face(1),
                SimplexGen::Degen(2)
            ]
        );
        assert_eq!(
            parse_word::<Cube>("a0@1 b2", 1, 1).unwrap(),
            vec![CubeGen::Face(1, 0), CubeGen::Degen(2)]
        );
        assert_eq!(
            parse_word::<Cyclic>("t s3x d1", 1, 1).unwrap(),
            vec![CyclicGen::Rot, CyclicGen::Extra(3), CyclicGen::Face(1)]
        );
        assert_eq!(
            parse_word::<Globe>("sig tau iot", 1, 1).unwrap(),
            vec![GlobeGen::Src, GlobeGen::Tgt, GlobeGen::Refl]
        );
        assert!(parse_word::<Simplex>("", 1, 1).unwrap().is_empty());
        assert!(parse_word::<Simplex>("id", 1, 1).unwrap().is_empty());
        let e = parse_word::<Cube>("b1 a2@1", 3, 5).unwrap_err();
        assert_eq!((e.line, e.col), (3, 8));
        assert!(parse_word::<Cube>("b0", 1, 1).is_err());
    }

    #[test]
    fn cell_literals_resolve_to_degeneracies() {
        let ce = cubical_counterexample(1).unwrap();
        let x = &ce.complex;
        let c = parse_cell(x, "x[b1]", 1, 1).unwrap();
        assert_eq!(
            c,
            x.cell(x.lookup("x").unwrap(), CubeMorphism::degeneracy(1, 1))
                .unwrap()
        );
        assert!(parse_cell(x, "x[a0@1]", 1, 1)
            .unwrap_err()
            .msg
            .contains("not an epimorphism"));
        assert!(parse_cell(x, "z", 1, 1)
            .unwrap_err()
            .msg
            .contains("unknown generator"));
    }

    #[test]
    fn files_round_trip_through_the_printer() {
        let ce = simplicial_counterexample(3).unwrap();
        let text = print_complex(&ce.complex, Some(&ce.sphere));
        match parse_document(&text).unwrap() {
            Document::Simplicial(f) => {
                assert_eq!(f.complex, ce.complex);
                assert_eq!(f.sphere, Some(ce.sphere));
            }
            other => panic!("wrong shape {:?}", other.shape()),
        }
        let ce = cyclic_counterexample(2).unwrap();
        let text = print_complex(&ce.complex, Some(&ce.sphere));
        match parse_document(&text).unwrap() {
            Document::Cyclic(f) => assert_eq!((f.complex, f.sphere), (ce.complex, Some(ce.sphere))),
            other => panic!("wrong shape {:?}", other.shape()),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let text = "shape cubical\nskeletal 1\n# vertex\ngen v dim 0\ngen x dim 1 faces v w\n";
        let e = parse_document(text).unwrap_err();
        assert_eq!((e.line, e.col), (5, 21));
        let e = parse_document("shape cubical\nskeletal 1\ngen v dim 0\ngen x dim 1 faces v\n")
            .unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.msg.contains("needs 2 faces"));
        let e = parse_document("skeletal 1\n").unwrap_err();
        assert!(e.msg.contains("shape"));
        let e = parse_document("shape prism\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 7));
    }

    #[test]
    fn spheres_parse_with_commas() {
        let ce = cubical_counterexample(1).unwrap();
        let s = parse_sphere(&ce.complex, "x, x, y, y", 1, 1).unwrap();
        assert_eq!(s, ce.sphere);
        assert!(parse_sphere(&ce.complex, "x, x, y", 1, 1).is_err());
        assert!(parse_sphere(&ce.complex, "x y, x, y, y", 1, 1).is_err());
    }
}
