//! Lexer and parser producing the syntax tree. Statements end at `;` or a
//! newline; `#` starts a comment running to the end of the line.

use std::fmt;

use serde::Serialize;

use super::{Diagnostic, Span};

/// A value with the place it was written. Equality ignores the span, so
/// documents compare equal after a round trip through the serializer.
#[derive(Clone, Debug, Serialize)]
pub struct Spanned<T> {
    pub value: T,
    #[serde(skip)]
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Eq> Eq for Spanned<T> {}

impl<T> Spanned<T> {
    pub fn new(value: T, span: Span) -> Self {
        Spanned { value, span }
    }
}

pub type Ident = Spanned<String>;

/// Builds an identifier with no source position, for generated documents.
pub fn ident(name: impl Into<String>) -> Ident {
    Spanned::new(name.into(), Span::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Document {
    pub groupoids: Vec<GroupoidDecl>,
    pub functors: Vec<FunctorDecl>,
    pub subgroupoids: Vec<SubgroupoidDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidDecl {
    pub name: Ident,
    pub objects: Vec<Ident>,
    pub morphisms: Vec<MorphismDecl>,
    pub compositions: Vec<ComposeDecl>,
    pub inverses: Vec<InverseDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
}

/// `compose g . f = h`, i.e. `g∘f = h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComposeDecl {
    pub g: Ident,
    pub f: Ident,
    pub h: Ident,
    #[serde(skip)]
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseDecl {
    pub f: Ident,
    pub inverse: Ident,
    #[serde(skip)]
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub objects: Vec<(Ident, Ident)>,
    pub morphisms: Vec<(Ident, Ident)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupoidDecl {
    pub name: Ident,
    pub parent: Ident,
    pub morphisms: Vec<Ident>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    Colon,
    Semi,
    Comma,
    Dot,
    Eq,
    Arrow,
    FatArrow,
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::Colon => f.write_str("':'"),
            Tok::Semi => f.write_str("';'"),
            Tok::Comma => f.write_str("','"),
            Tok::Dot => f.write_str("'.'"),
            Tok::Eq => f.write_str("'='"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::FatArrow => f.write_str("'=>'"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let at = |col: usize, len: usize| Span {
            line: i + 1,
            col: col + 1,
            len,
        };
        let mut c = 0;
        while c < chars.len() {
            let ch = chars[c];
            if ch == '#' {
                break;
            }
            if ch.is_whitespace() {
                c += 1;
                continue;
            }
            if ch.is_ascii_alphabetic() || ch == '_' {
                let start = c;
                while c < chars.len() && (chars[c].is_ascii_alphanumeric() || chars[c] == '_') {
                    c += 1;
                }
                let word: String = chars[start..c].iter().collect();
                out.push((Tok::Ident(word), at(start, c - start)));
                continue;
            }
            let next = chars.get(c + 1).copied();
            let (tok, len) = match (ch, next) {
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('=', Some('>')) => (Tok::FatArrow, 2),
                ('=', _) => (Tok::Eq, 1),
                ('{', _) => (Tok::LBrace, 1),
                ('}', _) => (Tok::RBrace, 1),
                (':', _) => (Tok::Colon, 1),
                (';', _) => (Tok::Semi, 1),
                (',', _) => (Tok::Comma, 1),
                ('.', _) => (Tok::Dot, 1),
                _ => {
                    return Err(Diagnostic::new(
                        "SyntaxError",
                        at(c, 1),
                        format!("unexpected character '{ch}'"),
                    ))
                }
            };
            out.push((tok, at(c, len)));
            c += len;
        }
        out.push((Tok::Newline, at(chars.len(), 1)));
    }
    let line = text.lines().count().max(1);
    out.push((Tok::Eof, Span { line, col: 1, len: 1 }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Diagnostic {
        Diagnostic::new(
            "SyntaxError",
            self.span(),
            format!("expected {expected}, found {}", self.peek()),
        )
    }

    fn expect(&mut self, tok: Tok) -> PResult<Span> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(&tok.to_string()))
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let (_, span) = self.bump();
                Ok(Spanned::new(s, span))
            }
            _ => Err(self.error("an identifier")),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<Span> {
        match self.peek() {
            Tok::Ident(s) if s == word => Ok(self.bump().1),
            _ => Err(self.error(&format!("'{word}'"))),
        }
    }

    fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
    }

    fn skip_terminators(&mut self) {
        while matches!(self.peek(), Tok::Newline | Tok::Semi) {
            self.bump();
        }
    }

    /// `;`, end of line, or a closing brace left for the caller.
    fn end_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Semi | Tok::Newline => {
                self.bump();
                Ok(())
            }
            Tok::RBrace => Ok(()),
            _ => Err(self.error("';' or end of line")),
        }
    }

    fn ident_list(&mut self) -> PResult<Vec<Ident>> {
        let mut items = vec![self.ident()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            self.skip_newlines();
            items.push(self.ident()?);
        }
        Ok(items)
    }

    fn open_block(&mut self) -> PResult<()> {
        self.skip_newlines();
        self.expect(Tok::LBrace)?;
        self.skip_terminators();
        Ok(())
    }

    fn document(&mut self) -> PResult<Document> {
        let mut doc = Document::default();
        loop {
            self.skip_terminators();
            match self.peek().clone() {
                Tok::Eof => return Ok(doc),
                Tok::Ident(w) if w == "groupoid" => doc.groupoids.push(self.groupoid()?),
                Tok::Ident(w) if w == "functor" => doc.functors.push(self.functor()?),
                Tok::Ident(w) if w == "subgroupoid" => doc.subgroupoids.push(self.subgroupoid()?),
                _ => return Err(self.error("'groupoid', 'functor' or 'subgroupoid'")),
            }
        }
    }

    fn groupoid(&mut self) -> PResult<GroupoidDecl> {
        self.keyword("groupoid")?;
        let name = self.ident()?;
        self.open_block()?;
        let mut decl = GroupoidDecl {
            name,
            objects: Vec::new(),
            morphisms: Vec::new(),
            compositions: Vec::new(),
            inverses: Vec::new(),
        };
        while *self.peek() != Tok::RBrace {
            let start = self.span();
            match self.peek().clone() {
                Tok::Ident(w) if w == "objects" => {
                    self.bump();
                    self.expect(Tok::Colon)?;
                    decl.objects.extend(self.ident_list()?);
                }
                Tok::Ident(w) if w == "morphism" => {
                    self.bump();
                    let name = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let source = self.ident()?;
                    self.expect(Tok::Arrow)?;
                    let target = self.ident()?;
                    decl.morphisms.push(MorphismDecl {
                        name,
                        source,
                        target,
                    });
                }
                Tok::Ident(w) if w == "compose" => {
                    self.bump();
                    let g = self.ident()?;
                    self.expect(Tok::Dot)?;
                    let f = self.ident()?;
                    self.expect(Tok::Eq)?;
                    let h = self.ident()?;
                    let span = start.through(&h.span);
                    decl.compositions.push(ComposeDecl { g, f, h, span });
                }
                Tok::Ident(w) if w == "inverse" => {
                    self.bump();
                    let f = self.ident()?;
                    self.expect(Tok::Eq)?;
                    let inverse = self.ident()?;
                    let span = start.through(&inverse.span);
                    decl.inverses.push(InverseDecl { f, inverse, span });
                }
                _ => return Err(self.error("'objects', 'morphism', 'compose', 'inverse' or '}'")),
            }
            self.end_statement()?;
            self.skip_terminators();
        }
        self.bump();
        if decl.objects.is_empty() {
            return Err(Diagnostic::new(
                "SyntaxError",
                decl.name.span,
                "expected an 'objects:' line; a groupoid needs at least one object".into(),
            ));
        }
        Ok(decl)
    }

    fn functor(&mut self) -> PResult<FunctorDecl> {
        self.keyword("functor")?;
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let source = self.ident()?;
        self.expect(Tok::Arrow)?;
        let target = self.ident()?;
        self.open_block()?;
        let mut decl = FunctorDecl {
            name,
            source,
            target,
            objects: Vec::new(),
            morphisms: Vec::new(),
        };
        while *self.peek() != Tok::RBrace {
            let is_object = match self.peek() {
                Tok::Ident(w) if w == "object" => true,
                Tok::Ident(w) if w == "morphism" => false,
                _ => return Err(self.error("'object', 'morphism' or '}'")),
            };
            self.bump();
            let from = self.ident()?;
            self.expect(Tok::FatArrow)?;
            let to = self.ident()?;
            if is_object {
                decl.objects.push((from, to));
            } else {
                decl.morphisms.push((from, to));
            }
            self.end_statement()?;
            self.skip_terminators();
        }
        self.bump();
        Ok(decl)
    }

    fn subgroupoid(&mut self) -> PResult<SubgroupoidDecl> {
        self.keyword("subgroupoid")?;
        let name = self.ident()?;
        self.keyword("of")?;
        let parent = self.ident()?;
        self.open_block()?;
        let mut morphisms = Vec::new();
        while *self.peek() != Tok::RBrace {
            self.keyword("morphisms")?;
            self.expect(Tok::Colon)?;
            morphisms.extend(self.ident_list()?);
            self.end_statement()?;
            self.skip_terminators();
        }
        self.bump();
        Ok(SubgroupoidDecl {
            name,
            parent,
            morphisms,
        })
    }
}

/// Parses a document. Stops at the first syntax error.
pub fn parse(text: &str) -> Result<Document, Diagnostic> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.document()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = "\
# the pair groupoid on two objects
groupoid P {
  objects: O1, O2
  morphism f : O1 -> O2
  morphism g : O2 -> O1
  compose g . f = id_O1; compose f . g = id_O2
}
";

    #[test]
    fn parses_pair_groupoid() {
        let doc = parse(PAIR).unwrap();
        let g = &doc.groupoids[0];
        assert_eq!(g.name.value, "P");
        assert_eq!(g.objects.len(), 2);
        assert_eq!(g.morphisms.len(), 2);
        assert_eq!(g.compositions.len(), 2);
        assert_eq!(g.morphisms[0].target.span, Span { line: 4, col: 22, len: 2 });
        assert_eq!(g.compositions[1].span, Span { line: 6, col: 26, len: 21 });
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse("").unwrap(), Document::default());
        assert_eq!(parse("# nothing\n\n").unwrap(), Document::default());
    }

    #[test]
    fn syntax_errors_point_at_the_token() {
        let e = parse("groupoid G {\n  objects: A\n  morphism f A -> A\n}").unwrap_err();
        assert_eq!(e.kind, "SyntaxError");
        assert_eq!(e.span, Span { line: 3, col: 14, len: 1 });
        let e = parse("groupoid G { objects: A $ }").unwrap_err();
        assert_eq!(e.span, Span { line: 1, col: 25, len: 1 });
        let e = parse("groupoid G {\n}").unwrap_err();
        assert_eq!(e.span, Span { line: 1, col: 10, len: 1 });
    }

    #[test]
    fn functors_and_subgroupoids() {
        let doc = parse(
            "functor F : G -> H {\n object pt => pt\n morphism a => b; }\nsubgroupoid K of G { morphisms: a2 }",
        )
        .unwrap();
        assert_eq!(doc.functors[0].morphisms[0].1.value, "b");
        assert_eq!(doc.subgroupoids[0].morphisms[0].value, "a2");
    }
}
