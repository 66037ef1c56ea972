//! Recursive-descent parser for the session language.
//!
//! ```text
//! basis W = { e1 e2 };
//! let P : W = (1, 0);
//! let k = ket[P; (0, 1), (2, 3)] - 1/2 * ket[W(0, 0);];
//! let f = poly[W]{ x.e1^2*x.e2 - 3/2 };
//! linmap phi : !W -> V { |e1|_P -> (1, 0); |0|_P -> (0, 2); }
//! linear psi : W -> V { e1 -> (0, 1); e2 -> (1, 0); }
//! set cap 8;
//! delta k; eps k; d k; pair f k; raction f k; creation (1, 0) k;
//! promote phi k; map psi k; fractions k;
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use sweedler::{Label, Multiindex, Polynomial, Rational};

use crate::ast::*;
use crate::error::SyntaxError;
use crate::lexer::{tokenize, Pos, Tok, Token};

pub fn parse(src: &str) -> Result<Vec<Statement>, SyntaxError> {
    let tokens = tokenize(src)?;
    let end = tokens.last().map_or(Pos { line: 1, col: 1 }, |t| t.pos);
    Parser { tokens, i: 0, end }.program()
}

struct Parser {
    tokens: Vec<Token>,
    i: usize,
    end: Pos,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.i).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.tokens.get(self.i + k).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.i).map_or(self.end, |t| t.pos)
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        let found = self.peek().map_or("end of input".to_string(), Tok::describe);
        Err(SyntaxError::new(self.pos(), format!("expected {expected}, found {found}")))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.i += 1;
                Ok(s)
            }
            _ => self.error("an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.i += 1;
                Ok(())
            }
            _ => self.error(&format!("`{kw}`")),
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse().expect("lexer only emits digits");
                self.i += 1;
                Ok(v)
            }
            _ => self.error("an integer"),
        }
    }

    fn small_int(&mut self) -> PResult<u32> {
        let pos = self.pos();
        let v = self.int()?;
        u32::try_from(v).map_err(|_| SyntaxError::new(pos, "exponent out of range"))
    }

    /// `p` or `p/q`, unsigned.
    fn unsigned_rational(&mut self) -> PResult<Rational> {
        let num = self.int()?;
        if self.eat(&Tok::Slash) {
            let pos = self.pos();
            let den = self.int()?;
            if den.is_zero() {
                return Err(SyntaxError::new(pos, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn rational(&mut self) -> PResult<Rational> {
        let neg = self.eat(&Tok::Minus);
        let r = self.unsigned_rational()?;
        Ok(if neg { -r } else { r })
    }

    fn tuple(&mut self) -> PResult<Vec<Rational>> {
        self.expect(Tok::LParen, "`(`")?;
        let mut out = Vec::new();
        if self.eat(&Tok::RParen) {
            return Ok(out);
        }
        loop {
            out.push(self.rational()?);
            if self.eat(&Tok::RParen) {
                return Ok(out);
            }
            self.expect(Tok::Comma, "`,` or `)`")?;
        }
    }

    fn program(&mut self) -> PResult<Vec<Statement>> {
        let mut out: Vec<Statement> = Vec::new();
        while let Some(tok) = self.peek() {
            if let Tok::Expect(text) = tok {
                let text = text.clone();
                let pos = self.pos();
                match out.last_mut() {
                    Some(stmt) if matches!(stmt.command, Command::Query(_)) && stmt.expect.is_none() => {
                        stmt.expect = Some(text);
                        self.i += 1;
                        continue;
                    }
                    _ => {
                        return Err(SyntaxError::new(
                            pos,
                            "`expect:` must follow a query that has no expectation yet",
                        ))
                    }
                }
            }
            let pos = self.pos();
            let command = self.statement()?;
            out.push(Statement {
                command,
                pos,
                expect: None,
            });
        }
        Ok(out)
    }

    fn statement(&mut self) -> PResult<Command> {
        let head = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return self.error("a statement"),
        };
        let cmd = match head.as_str() {
            "basis" => self.basis()?,
            "let" => self.let_binding()?,
            "linmap" => return self.linmap(),
            "linear" => return self.linear(),
            "set" => {
                self.i += 1;
                let option = self.ident()?;
                let value = match self.peek() {
                    Some(Tok::Ident(s)) | Some(Tok::Int(s)) => s.clone(),
                    _ => return self.error("an option value"),
                };
                self.i += 1;
                Command::Set { option, value }
            }
            _ => Command::Query(self.query()?),
        };
        self.expect(Tok::Semi, "`;`")?;
        Ok(cmd)
    }

    fn basis(&mut self) -> PResult<Command> {
        self.keyword("basis")?;
        let name = self.ident()?;
        self.expect(Tok::Eq, "`=`")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut labels = Vec::new();
        while !self.eat(&Tok::RBrace) {
            labels.push(self.ident()?);
        }
        Ok(Command::Basis { name, labels })
    }

    fn let_binding(&mut self) -> PResult<Command> {
        self.keyword("let")?;
        let name = self.ident()?;
        if self.eat(&Tok::Colon) {
            let basis = self.ident()?;
            self.expect(Tok::Eq, "`=`")?;
            let coords = self.tuple()?;
            return Ok(Command::LetVector { name, basis, coords });
        }
        self.expect(Tok::Eq, "`=`")?;
        if self.peek() == Some(&Tok::Ident("poly".into())) && self.peek_at(1) == Some(&Tok::LBracket) {
            let (basis, poly) = self.poly_literal()?;
            return Ok(Command::LetPoly { name, basis, poly });
        }
        let expr = self.bang_expr()?;
        Ok(Command::LetBang { name, expr })
    }

    fn linmap(&mut self) -> PResult<Command> {
        self.keyword("linmap")?;
        let name = self.ident()?;
        self.expect(Tok::Colon, "`:`")?;
        self.expect(Tok::Bang, "`!`")?;
        let domain = self.ident()?;
        self.expect(Tok::Arrow, "`->`")?;
        let codomain = self.ident()?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut entries = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let pat = self.ket_pattern()?;
            self.expect(Tok::Arrow, "`->`")?;
            let value = self.tuple()?;
            self.expect(Tok::Semi, "`;`")?;
            entries.push((pat, value));
        }
        self.eat(&Tok::Semi);
        Ok(Command::LinMap {
            name,
            domain,
            codomain,
            entries,
        })
    }

    fn ket_pattern(&mut self) -> PResult<KetPattern> {
        self.expect(Tok::Bar, "`|`")?;
        let mut content = Multiindex::one();
        if self.peek() == Some(&Tok::Int("0".into())) {
            self.i += 1;
        } else {
            loop {
                let label = Label::new(self.ident()?);
                let exp = if self.eat(&Tok::Caret) { self.small_int()? } else { 1 };
                content = content.mul(&Multiindex::single(label, exp));
                if self.peek() == Some(&Tok::Bar) {
                    break;
                }
            }
        }
        self.expect(Tok::Bar, "`|`")?;
        self.expect(Tok::Underscore, "`_`")?;
        let point = self.vec_ref()?;
        Ok(KetPattern { content, point })
    }

    fn linear(&mut self) -> PResult<Command> {
        self.keyword("linear")?;
        let name = self.ident()?;
        self.expect(Tok::Colon, "`:`")?;
        let domain = self.ident()?;
        self.expect(Tok::Arrow, "`->`")?;
        let codomain = self.ident()?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut entries = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let label = self.ident()?;
            self.expect(Tok::Arrow, "`->`")?;
            let value = self.tuple()?;
            self.expect(Tok::Semi, "`;`")?;
            entries.push((label, value));
        }
        self.eat(&Tok::Semi);
        Ok(Command::Linear {
            name,
            domain,
            codomain,
            entries,
        })
    }

    fn query(&mut self) -> PResult<Query> {
        let head = self.ident()?;
        let unary = |k| -> Option<QueryKind> { Some(k) };
        let kind = match head.as_str() {
            "delta" => unary(QueryKind::Delta),
            "eps" => unary(QueryKind::Counit),
            "d" => unary(QueryKind::Dereliction),
            "fractions" => unary(QueryKind::Fractions),
            _ => None,
        };
        if let Some(kind) = kind {
            return Ok(Query::Unary(kind, self.bang_expr()?));
        }
        Ok(match head.as_str() {
            "pair" => {
                let p = self.poly_ref()?;
                Query::Pair(p, self.bang_expr()?)
            }
            "raction" => {
                let p = self.poly_ref()?;
                Query::RAction(p, self.bang_expr()?)
            }
            "creation" => {
                let v = self.vec_ref()?;
                Query::Creation(v, self.bang_expr()?)
            }
            "promote" => {
                let n = self.ident()?;
                Query::Promote(n, self.bang_expr()?)
            }
            "map" => {
                let n = self.ident()?;
                Query::Map(n, self.bang_expr()?)
            }
            _ => {
                self.i -= 1;
                return self.error("a statement or query keyword");
            }
        })
    }

    fn vec_ref(&mut self) -> PResult<VecRef> {
        match self.peek() {
            Some(Tok::LParen) => Ok(VecRef::Tuple(self.tuple()?)),
            Some(Tok::Ident(_)) => {
                let name = self.ident()?;
                if self.peek() == Some(&Tok::LParen) {
                    Ok(VecRef::Typed(name, self.tuple()?))
                } else {
                    Ok(VecRef::Name(name))
                }
            }
            _ => self.error("a vector"),
        }
    }

    fn poly_ref(&mut self) -> PResult<PolyRef> {
        if self.peek() == Some(&Tok::Ident("poly".into())) && self.peek_at(1) == Some(&Tok::LBracket) {
            let (basis, poly) = self.poly_literal()?;
            return Ok(PolyRef::Literal { basis, poly });
        }
        Ok(PolyRef::Name(self.ident()?))
    }

    fn poly_literal(&mut self) -> PResult<(String, Polynomial)> {
        self.keyword("poly")?;
        self.expect(Tok::LBracket, "`[`")?;
        let basis = self.ident()?;
        self.expect(Tok::RBracket, "`]`")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut poly = Polynomial::zero();
        let mut sign = if self.eat(&Tok::Minus) { -Rational::one() } else { Rational::one() };
        loop {
            let (m, c) = self.poly_term()?;
            poly.add_term(m, c * &sign);
            if self.eat(&Tok::Plus) {
                sign = Rational::one();
            } else if self.eat(&Tok::Minus) {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        self.expect(Tok::RBrace, "`}` or an operator")?;
        Ok((basis, poly))
    }

    fn poly_term(&mut self) -> PResult<(Multiindex, Rational)> {
        let mut m = Multiindex::one();
        let mut c = Rational::one();
        loop {
            match self.peek() {
                Some(Tok::Int(_)) => c *= self.unsigned_rational()?,
                Some(Tok::Ident(x)) if x == "x" => {
                    self.i += 1;
                    self.expect(Tok::Dot, "`.` after `x`")?;
                    let label = Label::new(self.ident()?);
                    let exp = if self.eat(&Tok::Caret) { self.small_int()? } else { 1 };
                    m = m.mul(&Multiindex::single(label, exp));
                }
                _ => return self.error("a coefficient or `x.label`"),
            }
            if !self.eat(&Tok::Star) {
                return Ok((m, c));
            }
        }
    }

    fn bang_expr(&mut self) -> PResult<BangExpr> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(&Tok::Minus) { -Rational::one() } else { Rational::one() };
        loop {
            let coeff = if matches!(self.peek(), Some(Tok::Int(_))) {
                let c = self.unsigned_rational()?;
                self.expect(Tok::Star, "`*`")?;
                c
            } else {
                Rational::one()
            };
            let primary = self.primary()?;
            terms.push((coeff * &sign, primary));
            if self.eat(&Tok::Plus) {
                sign = Rational::one();
            } else if self.eat(&Tok::Minus) {
                sign = -Rational::one();
            } else {
                return Ok(BangExpr { terms });
            }
        }
    }

    fn primary(&mut self) -> PResult<Primary> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.i += 1;
                let e = self.bang_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Primary::Group(e))
            }
            Some(Tok::Ident(s)) if s == "ket" && self.peek_at(1) == Some(&Tok::LBracket) => {
                self.i += 2;
                let point = self.vec_ref()?;
                self.expect(Tok::Semi, "`;` after the ket's point")?;
                let mut vectors = Vec::new();
                if !self.eat(&Tok::RBracket) {
                    loop {
                        vectors.push(self.vec_ref()?);
                        if self.eat(&Tok::RBracket) {
                            break;
                        }
                        self.expect(Tok::Comma, "`,` or `]`")?;
                    }
                }
                Ok(Primary::Ket { point, vectors })
            }
            Some(Tok::Ident(_)) => Ok(Primary::Name(self.ident()?)),
            _ => self.error("a ket, a name or `(`"),
        }
    }
}
