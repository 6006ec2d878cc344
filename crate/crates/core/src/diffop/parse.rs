//! Operator syntax:
//!
//! ```text
//! opexpr := 'twist' '(' opexpr ')'
//!         | 'compose' '(' opexpr ',' opexpr ')'
//!         | normal
//! normal := ['+'|'-'] opterm (('+'|'-') opterm)*
//! opterm := (factor '*'?)* D[n1,...,nd] | factor ('*'? factor)*
//! ```
//!
//! `factor` is the polynomial factor rule. A term without `D[...]` is a
//! multiplication operator.

use super::{DiffOperator, OperatorExpr};
use crate::context::Ring;
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::parse::{Parser, Tok};
use crate::poly::Poly;

fn at_divided_power(p: &Parser) -> bool {
    matches!(p.peek(), Some(Tok::Ident(name)) if name == "D") && p.peek_at(1) == Some(&Tok::LBracket)
}

fn at_keyword(p: &Parser, kw: &str) -> bool {
    matches!(p.peek(), Some(Tok::Ident(name)) if name == kw) && p.peek_at(1) == Some(&Tok::LParen)
}

fn divided_power_order(p: &mut Parser) -> Result<ExponentVector> {
    p.bump();
    p.expect(Tok::LBracket, "`[`")?;
    let mut orders = vec![p.exponent()?];
    while p.peek() == Some(&Tok::Comma) {
        p.bump();
        orders.push(p.exponent()?);
    }
    let close = p.pos();
    p.expect(Tok::RBracket, "`]`")?;
    if orders.len() != p.ring.nvars() {
        return Err(Error::Syntax {
            pos: close,
            msg: format!("D[...] needs {} entries, found {}", p.ring.nvars(), orders.len()),
        });
    }
    Ok(ExponentVector::new(orders))
}

fn op_term(p: &mut Parser) -> Result<(Poly, ExponentVector)> {
    let mut coeff = Poly::one(p.ring);
    loop {
        if at_divided_power(p) {
            let b = divided_power_order(p)?;
            if matches!(p.peek(), Some(Tok::Star) | Some(Tok::Ident(_)) | Some(Tok::LParen)) {
                return p.error("D[...] must be the last factor of a term");
            }
            return Ok((coeff, b));
        }
        coeff = coeff.checked_mul(&p.factor()?)?;
        match p.peek() {
            Some(Tok::Star) => {
                p.bump();
            }
            Some(Tok::Ident(_)) | Some(Tok::LParen) => {}
            _ => return Ok((coeff, ExponentVector::zero(p.ring.nvars()))),
        }
    }
}

fn normal_form(p: &mut Parser) -> Result<DiffOperator> {
    let mut op = DiffOperator::zero(p.ring);
    let mut negate = false;
    match p.peek() {
        Some(Tok::Minus) => {
            p.bump();
            negate = true;
        }
        Some(Tok::Plus) => {
            p.bump();
        }
        _ => {}
    }
    loop {
        let (c, b) = op_term(p)?;
        op.add_term(b, if negate { -&c } else { c });
        match p.peek() {
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            _ => return Ok(op),
        }
        p.bump();
    }
}

fn op_expr(p: &mut Parser) -> Result<OperatorExpr> {
    if at_keyword(p, "twist") {
        p.bump();
        p.bump();
        let inner = op_expr(p)?;
        p.expect(Tok::RParen, "`)`")?;
        return Ok(super::frobenius_twist(inner));
    }
    if at_keyword(p, "compose") {
        p.bump();
        p.bump();
        let outer = op_expr(p)?;
        p.expect(Tok::Comma, "`,`")?;
        let inner = op_expr(p)?;
        p.expect(Tok::RParen, "`)`")?;
        return OperatorExpr::compose(outer, inner);
    }
    Ok(OperatorExpr::Leaf(normal_form(p)?))
}

/// Parses an operator in normal form, e.g. `4 * D[2,2,2,2]` or `x^2 * D[3] + D[0]`.
pub fn parse_operator(text: &str, ring: &Ring) -> Result<DiffOperator> {
    let mut p = Parser::new(text, ring)?;
    if p.at_end() {
        return p.error("empty operator");
    }
    let op = normal_form(&mut p)?;
    p.finish()?;
    Ok(op)
}

/// Parses an operator expression, allowing `twist(...)` and `compose(..., ...)`.
pub fn parse_operator_expr(text: &str, ring: &Ring) -> Result<OperatorExpr> {
    let mut p = Parser::new(text, ring)?;
    if p.at_end() {
        return p.error("empty operator");
    }
    let e = op_expr(&mut p)?;
    p.finish()?;
    Ok(e)
}
