// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lexer::{tokenize, Tok, Token};
use super::{
    AlgebraDocument, Arrow, LinearExpr, ParseError, Path, QuiverPresentation, SourceSpan,
    StructureDoc,
};
use crate::field::FieldSpec;

type PResult<T> = Result<T, ParseError>;

/// Parses one `algebra` or `quiver` document.
pub fn parse(text: &str) -> PResult<AlgebraDocument> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let doc = p.document()?;
    p.expect_eof()?;
    Ok(doc)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn quoted(s: &str) -> String {
    format!("`{s}`")
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::new(
            t.span,
            format!("unexpected {}", t.tok.describe()),
            expected.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<SourceSpan> {
        if self.peek().tok == tok {
            Ok(self.next().span)
        } else {
            Err(self.error_here(&[&quoted(tok.symbol())]))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<SourceSpan> {
        if self.is_keyword(kw) {
            Ok(self.next().span)
        } else {
            Err(self.error_here(&[&quoted(kw)]))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, SourceSpan)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.next().span)),
            _ => Err(self.error_here(&[what])),
        }
    }

    /// A basis label: identifier or quoted string.
    fn label(&mut self) -> PResult<(String, SourceSpan)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) | Tok::Str(s) => Ok((s, self.next().span)),
            _ => Err(self.error_here(&["basis label"])),
        }
    }

    fn expect_eof(&mut self) -> PResult<()> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.error_here(&["end of input"]))
        }
    }

    fn document(&mut self) -> PResult<AlgebraDocument> {
        if self.is_keyword("algebra") {
            self.next();
            let (name, field) = self.header()?;
            Ok(AlgebraDocument::Structure(self.structure_body(name, field)?))
        } else if self.is_keyword("quiver") {
            self.next();
            let (name, field) = self.header()?;
            Ok(AlgebraDocument::Quiver(self.quiver_body(name, field)?))
        } else {
            Err(self.error_here(&["`algebra`", "`quiver`"]))
        }
    }

    fn header(&mut self) -> PResult<(String, FieldSpec)> {
        let name = match self.peek().tok.clone() {
            Tok::Ident(s) | Tok::Str(s) => {
                self.next();
                s
            }
            _ => return Err(self.error_here(&["algebra name"])),
        };
        self.expect_keyword("over")?;
        let field = self.field()?;
        self.expect(Tok::LBrace)?;
        Ok((name, field))
    }

    fn field(&mut self) -> PResult<FieldSpec> {
        if self.is_keyword("QQ") {
            self.next();
            return Ok(FieldSpec::Rationals);
        }
        if !self.is_keyword("GF") {
            return Err(self.error_here(&["`QQ`", "`GF(p)`"]));
        }
        self.next();
        self.expect(Tok::LParen)?;
        let span = self.peek().span;
        let Tok::Int(p) = self.peek().tok.clone() else {
            return Err(self.error_here(&["prime modulus"]));
        };
        self.next();
        self.expect(Tok::RParen)?;
        let p: u64 = p.try_into().map_err(|_| {
            ParseError::new(span, "modulus out of range", vec!["prime below 2^31".into()])
        })?;
        FieldSpec::Prime(p).validated().map_err(|e| {
            ParseError::new(span, e.to_string(), vec!["prime below 2^31".into()])
        })
    }

    fn coefficient(&mut self) -> PResult<Option<BigRational>> {
        let Tok::Int(n) = self.peek().tok.clone() else {
            return Ok(None);
        };
        self.next();
        if self.eat(&Tok::Slash) {
            let span = self.peek().span;
            let Tok::Int(d) = self.peek().tok.clone() else {
                return Err(self.error_here(&["denominator"]));
            };
            self.next();
            if d.is_zero() {
                return Err(ParseError::new(span, "zero denominator", vec!["non-zero integer".into()]));
            }
            return Ok(Some(BigRational::new(n, d)));
        }
        Ok(Some(BigRational::from_integer(n)))
    }

    /// `[+|-] term (+|- term)*` where a term is `coef`, `coef [*] atom`, or `atom`.
    /// `atom` parses one symbol (or path) and reports unknown names.
    fn linear<T>(
        &mut self,
        mut atom: impl FnMut(&mut Self) -> PResult<T>,
        starts_atom: impl Fn(&Tok) -> bool,
    ) -> PResult<Vec<(BigRational, T)>> {
        const EXPECTED: &[&str] = &["linear expression"];
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        if self.eat(&Tok::Minus) {
            sign = -sign;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let coef = self.coefficient()?;
            let has_atom = match &coef {
                Some(_) => {
                    let star = self.eat(&Tok::Star);
                    if star && !starts_atom(&self.peek().tok) {
                        return Err(self.error_here(&["basis label"]));
                    }
                    star || starts_atom(&self.peek().tok)
                }
                None => {
                    if !starts_atom(&self.peek().tok) {
                        return Err(self.error_here(EXPECTED));
                    }
                    true
                }
            };
            let c = coef.unwrap_or_else(BigRational::one) * &sign;
            if has_atom {
                let a = atom(self)?;
                terms.push((c, Some(a)));
            } else {
                if !c.is_zero() {
                    let span = self.tokens[self.pos.saturating_sub(1)].span;
                    return Err(ParseError::new(
                        span,
                        "a non-zero constant needs a basis label",
                        vec!["basis label".into()],
                    ));
                }
                terms.push((c, None));
            }
            if self.eat(&Tok::Plus) {
                sign = BigRational::one();
            } else if self.eat(&Tok::Minus) {
                sign = -BigRational::one();
            } else {
                break;
            }
        }
        Ok(terms.into_iter().filter_map(|(c, a)| a.map(|a| (c, a))).collect())
    }

    fn structure_body(&mut self, name: String, field: FieldSpec) -> PResult<StructureDoc> {
        let mut basis: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut unit = None;
        let mut products: Vec<(String, String, LinearExpr)> = Vec::new();
        let mut seen_products: HashMap<(usize, usize), ()> = HashMap::new();
        loop {
            let kw_span = self.peek().span;
            if self.eat(&Tok::RBrace) {
                break;
            }
            let Tok::Ident(kw) = self.peek().tok.clone() else {
                return Err(self.error_here(&["`basis`", "`unit`", "`mult`", "`}`"]));
            };
            match kw.as_str() {
                "basis" => {
                    if !basis.is_empty() {
                        return Err(ParseError::new(kw_span, "basis declared twice", Vec::new()));
                    }
                    self.next();
                    loop {
                        let (label, span) = self.label()?;
                        if index.insert(label.clone(), basis.len()).is_some() {
                            return Err(ParseError::new(
                                span,
                                format!("duplicate basis label `{label}`"),
                                Vec::new(),
                            ));
                        }
                        basis.push(label);
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                    self.expect(Tok::Semi)?;
                }
                "unit" | "mult" if basis.is_empty() => {
                    return Err(ParseError::new(
                        kw_span,
                        format!("`{kw}` before the basis is declared"),
                        vec!["`basis`".into()],
                    ));
                }
                "unit" => {
                    if unit.is_some() {
                        return Err(ParseError::new(kw_span, "unit declared twice", Vec::new()));
                    }
                    self.next();
                    self.expect(Tok::Eq)?;
                    let e = self.label_expr(&index)?;
                    self.expect(Tok::Semi)?;
                    unit = Some(e);
                }
                "mult" => {
                    self.next();
                    let (a, sa) = self.label()?;
                    let ia = lookup(&index, &a, sa)?;
                    self.expect(Tok::Star)?;
                    let (b, sb) = self.label()?;
                    let ib = lookup(&index, &b, sb)?;
                    self.expect(Tok::Eq)?;
                    let e = self.label_expr(&index)?;
                    self.expect(Tok::Semi)?;
                    if seen_products.insert((ia, ib), ()).is_some() {
                        return Err(ParseError::new(
                            kw_span,
                            format!("product {a}*{b} given twice"),
                            Vec::new(),
                        ));
                    }
                    products.push((a, b, e));
                }
                _ => return Err(self.error_here(&["`basis`", "`unit`", "`mult`", "`}`"])),
            }
        }
        if basis.is_empty() {
            let span = self.tokens[self.pos.saturating_sub(1)].span;
            return Err(ParseError::new(span, "algebra has no basis", vec!["`basis`".into()]));
        }
        Ok(StructureDoc { name, field, basis, unit, products })
    }

    fn label_expr(&mut self, index: &HashMap<String, usize>) -> PResult<LinearExpr> {
        self.linear(
            |p| {
                let (s, span) = p.label()?;
                lookup(index, &s, span)?;
                Ok(s)
            },
            |t| matches!(t, Tok::Ident(_) | Tok::Str(_)),
        )
    }

    fn vertex(&mut self, index: &HashMap<String, usize>) -> PResult<usize> {
        let (name, span) = self.vertex_name()?;
        index.get(&name).copied().ok_or_else(|| {
            ParseError::new(span, format!("unknown vertex `{name}`"), vec!["declared vertex".into()])
        })
    }

    fn vertex_name(&mut self) -> PResult<(String, SourceSpan)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.next().span)),
            Tok::Int(n) => Ok((n.to_string(), self.next().span)),
            _ => Err(self.error_here(&["vertex name"])),
        }
    }

    fn quiver_body(&mut self, name: String, field: FieldSpec) -> PResult<QuiverPresentation> {
        let mut vertices: Vec<String> = Vec::new();
        let mut vindex: HashMap<String, usize> = HashMap::new();
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut aindex: HashMap<String, usize> = HashMap::new();
        let mut relations = Vec::new();
        let mut nilpotency = None;
        const ITEMS: &[&str] = &["`vertices`", "`arrow`", "`relations`", "`nilpotency`", "`}`"];
        loop {
            let kw_span = self.peek().span;
            if self.eat(&Tok::RBrace) {
                break;
            }
            let Tok::Ident(kw) = self.peek().tok.clone() else {
                return Err(self.error_here(ITEMS));
            };
            if kw != "vertices" && vertices.is_empty() && matches!(kw.as_str(), "arrow" | "relations") {
                return Err(ParseError::new(
                    kw_span,
                    format!("`{kw}` before the vertices are declared"),
                    vec!["`vertices`".into()],
                ));
            }
            match kw.as_str() {
                "vertices" => {
                    if !vertices.is_empty() {
                        return Err(ParseError::new(kw_span, "vertices declared twice", Vec::new()));
                    }
                    self.next();
                    loop {
                        let (v, span) = self.vertex_name()?;
                        if vindex.insert(v.clone(), vertices.len()).is_some() {
                            return Err(ParseError::new(
                                span,
                                format!("duplicate vertex `{v}`"),
                                Vec::new(),
                            ));
                        }
                        vertices.push(v);
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                    self.expect(Tok::Semi)?;
                }
                "arrow" => {
                    self.next();
                    let (label, span) = self.ident("arrow label")?;
                    if aindex.contains_key(&label) || vindex.contains_key(&label) {
                        return Err(ParseError::new(
                            span,
                            format!("duplicate symbol `{label}`"),
                            Vec::new(),
                        ));
                    }
                    self.expect(Tok::Colon)?;
                    let source = self.vertex(&vindex)?;
                    self.expect(Tok::Arrow)?;
                    let target = self.vertex(&vindex)?;
                    self.expect(Tok::Semi)?;
                    aindex.insert(label.clone(), arrows.len());
                    arrows.push(Arrow { label, source, target });
                }
                "relations" => {
                    self.next();
                    loop {
                        let lhs = self.path_expr(&vindex, &aindex, &arrows)?;
                        self.expect(Tok::Eq)?;
                        let rhs = self.path_expr(&vindex, &aindex, &arrows)?;
                        let mut rel = lhs;
                        rel.extend(rhs.into_iter().map(|(c, p)| (-c, p)));
                        relations.push(rel);
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                    self.expect(Tok::Semi)?;
                }
                "nilpotency" => {
                    if nilpotency.is_some() {
                        return Err(ParseError::new(kw_span, "nilpotency declared twice", Vec::new()));
                    }
                    self.next();
                    let span = self.peek().span;
                    let Tok::Int(n) = self.peek().tok.clone() else {
                        return Err(self.error_here(&["integer >= 2"]));
                    };
                    self.next();
                    let n: usize = n.try_into().unwrap_or(usize::MAX);
                    if !(2..=64).contains(&n) {
                        return Err(ParseError::new(
                            span,
                            "nilpotency bound must be between 2 and 64",
                            vec!["integer >= 2".into()],
                        ));
                    }
                    self.expect(Tok::Semi)?;
                    nilpotency = Some(n);
                }
                _ => return Err(self.error_here(ITEMS)),
            }
        }
        let end = self.tokens[self.pos.saturating_sub(1)].span;
        if vertices.is_empty() {
            return Err(ParseError::new(end, "quiver has no vertices", vec!["`vertices`".into()]));
        }
        let nilpotency = nilpotency.ok_or_else(|| {
            ParseError::new(end, "quiver needs a nilpotency bound", vec!["`nilpotency`".into()])
        })?;
        Ok(QuiverPresentation { name, field, vertices, arrows, relations, nilpotency })
    }

    fn path_expr(
        &mut self,
        vindex: &HashMap<String, usize>,
        aindex: &HashMap<String, usize>,
        arrows: &[Arrow],
    ) -> PResult<Vec<(BigRational, Path)>> {
        self.linear(
            |p| p.path(vindex, aindex, arrows),
            |t| matches!(t, Tok::Ident(_)),
        )
    }

    /// `atom (* atom)*` where an atom is an arrow or an identifier vertex.
    fn path(
        &mut self,
        vindex: &HashMap<String, usize>,
        aindex: &HashMap<String, usize>,
        arrows: &[Arrow],
    ) -> PResult<Path> {
        let mut path: Option<Path> = None;
        loop {
            let (s, span) = self.ident("arrow or vertex")?;
            let atom = if let Some(&a) = aindex.get(&s) {
                Path::Arrows(vec![a])
            } else if let Some(&v) = vindex.get(&s) {
                Path::Trivial(v)
            } else {
                return Err(ParseError::new(
                    span,
                    format!("unknown arrow or vertex `{s}`"),
                    vec!["declared arrow".into()],
                ));
            };
            path = Some(match path {
                None => atom,
                Some(prev) => compose(&prev, &atom, arrows).ok_or_else(|| {
                    ParseError::new(span, format!("`{s}` does not compose with the path before it"), Vec::new())
                })?,
            });
            if !(self.peek().tok == Tok::Star
                && matches!(self.tokens.get(self.pos + 1).map(|t| &t.tok), Some(Tok::Ident(_))))
            {
                break;
            }
            self.next();
        }
        Ok(path.expect("at least one atom"))
    }
}

fn lookup(index: &HashMap<String, usize>, s: &str, span: SourceSpan) -> PResult<usize> {
    index.get(s).copied().ok_or_else(|| {
        ParseError::new(span, format!("unknown basis label `{s}`"), vec!["declared basis label".into()])
    })
}

pub(crate) fn source(p: &Path, arrows: &[Arrow]) -> usize {
    match p {
        Path::Trivial(v) => *v,
        Path::Arrows(a) => arrows[a[0]].source,
    }
}

pub(crate) fn target(p: &Path, arrows: &[Arrow]) -> usize {
    match p {
        Path::Trivial(v) => *v,
        Path::Arrows(a) => arrows[*a.last().expect("non-empty")].target,
    }
}

/// `p` then `q`, if the endpoints match.
pub(crate) fn compose(p: &Path, q: &Path, arrows: &[Arrow]) -> Option<Path> {
    if target(p, arrows) != source(q, arrows) {
        return None;
    }
    Some(match (p, q) {
        (Path::Trivial(_), other) | (other, Path::Trivial(_)) => other.clone(),
        (Path::Arrows(a), Path::Arrows(b)) => {
            let mut c = a.clone();
            c.extend_from_slice(b);
            Path::Arrows(c)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_structure_document() {
        let doc = parse(
            "algebra D over QQ { basis e, x; unit = e; mult e*e = e; mult e*x = x; \
             mult x*e = x; mult x*x = 0; }",
        )
        .unwrap();
        let AlgebraDocument::Structure(s) = doc else { panic!("structure form") };
        assert_eq!(s.basis, vec!["e", "x"]);
        assert_eq!(s.products.len(), 4);
        assert!(s.products[3].2.is_empty());
    }

    #[test]
    fn coefficients() {
        let doc = parse("algebra k over QQ { basis e; unit = 2/2 e; mult e*e = -1/2*e + 3/2 e; }")
            .unwrap();
        let AlgebraDocument::Structure(s) = doc else { panic!() };
        let total: BigRational = s.products[0].2.iter().map(|(c, _)| c.clone()).sum();
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn missing_expression_is_positioned_at_semicolon() {
        let err = parse("algebra k over QQ {\n basis e1;\n mult e1*e1 = ;\n}").unwrap_err();
        assert_eq!((err.span.line, err.span.column), (3, 15));
        assert!(err.expected.iter().any(|e| e.contains("linear expression")));
    }

    #[test]
    fn quiver_document() {
        let doc = parse(
            "quiver R over GF(101) { vertices 1, 2; arrow x1: 1 -> 2; arrow x2: 2 -> 1; \
             relations x1*x2 = 0, x2*x1 = 0; nilpotency 3; }",
        )
        .unwrap();
        let AlgebraDocument::Quiver(q) = doc else { panic!() };
        assert_eq!(q.relations.len(), 2);
        assert_eq!(q.relations[0][0].1, Path::Arrows(vec![0, 1]));
        assert_eq!(q.nilpotency, 3);
    }

    #[test]
    fn non_composable_path_is_rejected() {
        let err = parse("quiver Q over QQ { vertices a, b; arrow x: a -> b; relations x*x = 0; nilpotency 2; }")
            .unwrap_err();
        assert!(err.message.contains("does not compose"));
    }
}
