use super::{Arrow, Constraint, LinComb, Presentation, PresentationError, Quiver, Relation, Scalar, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

/// Tokens of `text` with their 1-based columns; `col` is the column of the
/// first character of `text`.
fn tokenize(text: &str, line: usize, col: usize) -> Result<(Vec<Tok>, Vec<usize>), PresentationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut cols = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()=".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(syntax(line, col + i, format!("unexpected character `{c}`")));
        }
        cols.push(col + start);
    }
    Ok((out, cols))
}

fn width(s: &str) -> usize {
    s.chars().count()
}

struct Cursor<'a> {
    toks: &'a [Tok],
    cols: &'a [usize],
    end_col: usize,
    pos: usize,
    line: usize,
    quiver: Option<&'a Quiver>,
    params: &'a [String],
}

enum Factor {
    Scalar(Scalar),
    Arrows(Vec<usize>),
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> PresentationError {
        syntax(self.line, self.cols.get(self.pos).copied().unwrap_or(self.end_col), message)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn exponent(&mut self) -> Result<Option<usize>, PresentationError> {
        if !self.eat('^') {
            return Ok(None);
        }
        match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let e: usize = n.parse().map_err(|_| self.err("bad exponent"))?;
                if e == 0 {
                    return Err(self.err("exponent must be positive"));
                }
                Ok(Some(e))
            }
            _ => Err(self.err("expected exponent after `^`")),
        }
    }

    fn number(&mut self, n: String) -> Result<Scalar, PresentationError> {
        if self.eat('/') {
            match self.toks.get(self.pos) {
                Some(Tok::Num(d)) => {
                    self.pos += 1;
                    Ok(Scalar::Lit(format!("{n}/{d}")))
                }
                _ => Err(self.err("expected denominator")),
            }
        } else {
            Ok(Scalar::Lit(n))
        }
    }

    fn scalar_ident(&mut self, name: String) -> Result<Scalar, PresentationError> {
        if self.params.contains(&name) {
            let base = Scalar::Param(name);
            return Ok(match self.exponent()? {
                None | Some(1) => base,
                Some(e) => Scalar::Mul(vec![base; e]),
            });
        }
        if name == "g" {
            return Ok(match self.exponent()? {
                None => Scalar::Lit("g".into()),
                Some(e) => Scalar::Lit(format!("g^{e}")),
            });
        }
        Err(PresentationError::UnknownSymbol { line: self.line, name })
    }

    fn scalar_atom(&mut self) -> Result<Scalar, PresentationError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                self.number(n)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.scalar_ident(name)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.scalar_expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(Scalar::Neg(Box::new(self.scalar_atom()?)))
            }
            _ => Err(self.err("expected a scalar")),
        }
    }

    fn scalar_product(&mut self) -> Result<Scalar, PresentationError> {
        let mut xs = vec![self.scalar_atom()?];
        while self.eat('*') {
            xs.push(self.scalar_atom()?);
        }
        Ok(if xs.len() == 1 { xs.pop().unwrap() } else { Scalar::Mul(xs) })
    }

    fn scalar_expr(&mut self) -> Result<Scalar, PresentationError> {
        let neg = self.eat('-');
        let first = self.scalar_product()?;
        let mut xs = vec![if neg { Scalar::Neg(Box::new(first)) } else { first }];
        loop {
            if self.eat('+') {
                xs.push(self.scalar_product()?);
            } else if self.eat('-') {
                xs.push(Scalar::Neg(Box::new(self.scalar_product()?)));
            } else {
                break;
            }
        }
        Ok(if xs.len() == 1 { xs.pop().unwrap() } else { Scalar::Add(xs) })
    }

    fn factor(&mut self) -> Result<Factor, PresentationError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if let Some(a) = self.quiver.and_then(|q| q.arrow(&name)) {
                    self.pos += 1;
                    let e = self.exponent()?.unwrap_or(1);
                    return Ok(Factor::Arrows(vec![a; e]));
                }
                self.pos += 1;
                Ok(Factor::Scalar(self.scalar_ident(name)?))
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Factor::Scalar(self.number(n)?))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.scalar_expr()?;
                self.expect(')')?;
                Ok(Factor::Scalar(e))
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn term(&mut self, negative: bool, text: &str) -> Result<Term, PresentationError> {
        let mut factors = Vec::new();
        let mut arrows = Vec::new();
        loop {
            match self.factor()? {
                Factor::Scalar(s) => factors.push(s),
                Factor::Arrows(a) => arrows.extend(a),
            }
            if !self.eat('*') {
                break;
            }
        }
        if arrows.is_empty() {
            return Err(PresentationError::NonAdmissible { line: self.line });
        }
        let path = self
            .quiver
            .expect("relations parsed after the quiver")
            .path(&arrows)
            .ok_or_else(|| PresentationError::NonComposable {
                line: self.line,
                text: text.trim().to_string(),
            })?;
        Ok(Term { negative, factors, path })
    }

    fn lincomb(&mut self, text: &str) -> Result<LinComb, PresentationError> {
        if self.toks[self.pos..] == [Tok::Num("0".into())] {
            self.pos += 1;
            return Ok(LinComb::default());
        }
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            terms.push(self.term(negative, text)?);
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(LinComb { terms })
    }
}

fn parse_relation(text: &str, line: usize, col: usize, quiver: &Quiver, params: &[String]) -> Result<Relation, PresentationError> {
    let (l, r) = text
        .split_once('=')
        .ok_or_else(|| syntax(line, col + width(text), "relation needs `=`"))?;
    let side = |s: &str, start: usize| -> Result<LinComb, PresentationError> {
        let (toks, cols) = tokenize(s, line, start)?;
        if toks.is_empty() {
            return Err(syntax(line, start, "empty side of relation"));
        }
        Cursor {
            toks: &toks,
            cols: &cols,
            end_col: start + width(s),
            pos: 0,
            line,
            quiver: Some(quiver),
            params,
        }
        .lincomb(s)
    };
    let rel = Relation {
        lhs: side(l, col)?,
        rhs: side(r, col + width(l) + 1)?,
    };
    let ends: Vec<_> = rel.paths().map(|p| (p.start, p.end)).collect();
    match ends.first() {
        None => return Err(syntax(line, col, "relation has no terms")),
        Some(first) => {
            if ends.iter().any(|e| e != first) {
                return Err(PresentationError::NonUniform { line });
            }
        }
    }
    if rel.paths().any(|p| p.len() < 2) {
        return Err(PresentationError::NonAdmissible { line });
    }
    Ok(rel)
}

fn parse_scalar_list(text: &str, line: usize, col: usize, params: &[String]) -> Result<Vec<Scalar>, PresentationError> {
    let mut start = col;
    text.split(',')
        .map(|item| {
            let item_col = start;
            start += width(item) + 1;
            let (toks, cols) = tokenize(item, line, item_col)?;
            let mut c = Cursor {
                toks: &toks,
                cols: &cols,
                end_col: item_col + width(item),
                pos: 0,
                line,
                quiver: None,
                params,
            };
            let s = c.scalar_expr()?;
            if c.pos != toks.len() {
                return Err(c.err("trailing input in value list"));
            }
            Ok(s)
        })
        .collect()
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[derive(PartialEq)]
enum Section {
    Header,
    Relations,
    Resolution,
}

/// Parses the line-oriented `.qa` presentation format.
pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
    let mut name = None;
    let mut params: Vec<String> = Vec::new();
    let mut raw_constraints: Vec<(usize, usize, String)> = Vec::new();
    let mut quiver = Quiver::default();
    let mut have_vertices = false;
    let mut relations = Vec::new();
    let mut resolution: Option<Vec<Relation>> = None;
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let uncommented = raw.split('#').next().unwrap();
        let content = uncommented.trim();
        if content.is_empty() {
            continue;
        }
        let col = width(uncommented) - width(uncommented.trim_start()) + 1;
        if let Some(rest) = content.strip_prefix("algebra ") {
            if name.is_some() {
                return Err(PresentationError::Duplicate { line, name: "algebra".into() });
            }
            let rest = rest.trim();
            let (n, ps) = match rest.split_once(" params ") {
                Some((n, ps)) => (n.trim(), Some(ps)),
                None => (rest, None),
            };
            if !is_ident(n) {
                return Err(syntax(line, col, format!("bad algebra name `{n}`")));
            }
            name = Some(n.to_string());
            for p in ps.into_iter().flat_map(|s| s.split(',')) {
                let p = p.trim();
                if !is_ident(p) || p == "g" {
                    return Err(syntax(line, col, format!("bad parameter name `{p}`")));
                }
                if params.iter().any(|x| x == p) {
                    return Err(PresentationError::Duplicate { line, name: p.into() });
                }
                params.push(p.to_string());
            }
        } else if let Some(rest) = content.strip_prefix("field-constraints:") {
            for c in rest.split(';').map(str::trim).filter(|c| !c.is_empty()) {
                raw_constraints.push((line, col, c.to_string()));
            }
        } else if let Some(rest) = content.strip_prefix("vertices:") {
            if have_vertices {
                return Err(PresentationError::Duplicate { line, name: "vertices".into() });
            }
            have_vertices = true;
            for v in rest.split(',').map(str::trim) {
                if v.is_empty() || v.contains(char::is_whitespace) {
                    return Err(syntax(line, col, format!("bad vertex label `{v}`")));
                }
                if quiver.vertex(v).is_some() {
                    return Err(PresentationError::Duplicate { line, name: v.into() });
                }
                quiver.vertices.push(v.to_string());
            }
        } else if let Some(rest) = content.strip_prefix("arrow ") {
            if section != Section::Header {
                return Err(syntax(line, col, "arrows must precede relations"));
            }
            let (label, ends) = rest
                .split_once(':')
                .ok_or_else(|| syntax(line, col, "expected `arrow <label>: <src> -> <tgt>`"))?;
            let label = label.trim();
            if !is_ident(label) || label == "g" || params.iter().any(|p| p == label) {
                return Err(syntax(line, col, format!("bad arrow label `{label}`")));
            }
            if quiver.arrow(label).is_some() {
                return Err(PresentationError::Duplicate { line, name: label.into() });
            }
            let (s, t) = ends
                .split_once("->")
                .ok_or_else(|| syntax(line, col, "expected `->`"))?;
            let vertex = |v: &str| {
                quiver.vertex(v.trim()).ok_or_else(|| PresentationError::UnknownSymbol {
                    line,
                    name: v.trim().to_string(),
                })
            };
            let (source, target) = (vertex(s)?, vertex(t)?);
            quiver.arrows.push(Arrow {
                label: label.to_string(),
                source,
                target,
            });
        } else if content == "relations:" {
            if !relations.is_empty() || section == Section::Relations {
                return Err(PresentationError::Duplicate { line, name: "relations".into() });
            }
            section = Section::Relations;
        } else if content == "resolution-relations:" {
            if resolution.is_some() {
                return Err(PresentationError::Duplicate { line, name: "resolution-relations".into() });
            }
            resolution = Some(Vec::new());
            section = Section::Resolution;
        } else {
            let rel = match section {
                Section::Header => return Err(syntax(line, col, format!("unrecognised line `{content}`"))),
                _ => parse_relation(content, line, col, &quiver, &params)?,
            };
            match section {
                Section::Relations => relations.push(rel),
                Section::Resolution => resolution.as_mut().unwrap().push(rel),
                Section::Header => unreachable!(),
            }
        }
    }

    let name = name.ok_or(PresentationError::Missing("algebra"))?;
    if !have_vertices {
        return Err(PresentationError::Missing("vertices"));
    }
    let mut constraints = Vec::new();
    for (line, col, c) in raw_constraints {
        let (param, set) = c
            .split_once("not-in")
            .ok_or_else(|| syntax(line, col, "expected `<param> not-in {...}`"))?;
        let param = param.trim().to_string();
        if !params.contains(&param) {
            return Err(PresentationError::UnknownSymbol { line, name: param });
        }
        let set = set
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| syntax(line, col, "expected `{...}`"))?;
        let excluded = parse_scalar_list(set, line, col, &params)?;
        constraints.push(Constraint { param, excluded });
    }
    Ok(Presentation {
        name,
        params,
        constraints,
        quiver,
        relations,
        resolution_relations: resolution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header() -> &'static str {
        "algebra t params lam\nvertices: 1, 2\narrow a: 1 -> 1\narrow s: 1 -> 2\narrow c: 2 -> 1\narrow b: 2 -> 2\n"
    }

    #[test]
    fn scalars_and_powers() {
        let p = parse(&format!("{}relations:\n  (g+1)*a^3 - 2/3*lam*s*c = 0\n", header())).unwrap();
        let r = &p.relations[0];
        assert_eq!(r.lhs.terms.len(), 2);
        assert_eq!(r.lhs.terms[0].path.arrows, vec![0, 0, 0]);
        assert_eq!(r.lhs.terms[0].factors, vec![Scalar::Add(vec![Scalar::Lit("g".into()), Scalar::Lit("1".into())])]);
        assert!(r.lhs.terms[1].negative);
        assert!(r.rhs.terms.is_empty());
    }

    #[test]
    fn error_kinds() {
        let bad = |rel: &str| parse(&format!("{}relations:\n  {rel}\n", header())).unwrap_err();
        assert!(matches!(bad("a*c = 0"), PresentationError::NonComposable { .. }));
        assert!(matches!(bad("a*a = s*b"), PresentationError::NonUniform { .. }));
        assert!(matches!(bad("a = 0"), PresentationError::NonAdmissible { .. }));
        assert!(matches!(bad("z*a*a = 0"), PresentationError::UnknownSymbol { .. }));
        assert!(matches!(bad("a*a"), PresentationError::Syntax { .. }));
        assert!(matches!(bad("a*a = a*a $"), PresentationError::Syntax { line: 8, col: 13, .. }));
        assert!(matches!(bad("a*a = a*a )"), PresentationError::Syntax { line: 8, col: 13, .. }));
        let e = parse("algebra t\nvertices: 1\narrow a: 1 -> 2\nrelations:\n a*a = 0\n").unwrap_err();
        assert!(matches!(e, PresentationError::UnknownSymbol { line: 3, .. }));
        assert!(matches!(parse("vertices: 1\n"), Err(PresentationError::Missing("algebra"))));
    }

    #[test]
    fn resolution_section() {
        let p = parse(&format!(
            "{}relations:\n  a*a = s*c\n  a*a*a*a = 0\nresolution-relations:\n  a*a = s*c\n",
            header()
        ))
        .unwrap();
        assert_eq!(p.relations.len(), 2);
        assert_eq!(p.resolution_relations.as_ref().unwrap().len(), 1);
    }
}
