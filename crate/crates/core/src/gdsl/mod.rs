//! A small text format for groupoids, functors and subgroupoid selections.
//!
//! ```text
//! groupoid Z2 {
//!   objects: pt
//!   morphism e : pt -> pt
//!   morphism a : pt -> pt
//!   compose a . a = e        # a∘a: the right operand is applied first
//! }
//! functor F : Z2 -> Z2 { object pt => pt; morphism a => e }
//! subgroupoid K of Z2 { morphisms: a }
//! ```
//!
//! Identities may be omitted (`id_<object>` is synthesized), as may their
//! composites and any inverse the table already determines.

mod resolve;
mod syntax;
mod write;

use std::fmt;

use serde::Serialize;

pub use resolve::{load, resolve, Model};
pub use syntax::{
    ident, parse, ComposeDecl, Document, FunctorDecl, GroupoidDecl, Ident, InverseDecl,
    MorphismDecl, Spanned, SubgroupoidDecl,
};
pub use write::{groupoid_decl, serialize, serialize_groupoid};

/// A 1-based source position; `len` counts characters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub len: usize,
}

impl Span {
    /// From the start of `self` to the end of `end`, which must lie on the
    /// same line; otherwise just `self`.
    pub fn through(&self, end: &Span) -> Span {
        if end.line == self.line && end.col >= self.col {
            Span {
                len: end.col + end.len - self.col,
                ..*self
            }
        } else {
            *self
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// `SyntaxError`, `DuplicateName`, `UnresolvedReference`, or the kind of
    /// a semantic violation such as `AssociativityViolation`.
    pub kind: &'static str,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: &'static str, span: Span, message: String) -> Self {
        // Core descriptions lead with their kind; keep it only once.
        let message = match message.strip_prefix(kind).and_then(|m| m.strip_prefix(": ")) {
            Some(rest) => rest.to_string(),
            None => message,
        };
        Diagnostic { kind, span, message }
    }

    /// `file:line:col: kind: message`, with the offending line underlined
    /// when `source` is given.
    pub fn render(&self, file: &str, source: Option<&str>) -> String {
        let mut out = format!("{file}:{}: {}: {}", self.span, self.kind, self.message);
        if let Some(line) = source.and_then(|s| s.lines().nth(self.span.line.wrapping_sub(1))) {
            out.push_str(&format!(
                "\n  {line}\n  {}{}",
                " ".repeat(self.span.col.saturating_sub(1)),
                "^".repeat(self.span.len.max(1))
            ));
        }
        out
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.span, self.kind, self.message)
    }
}
