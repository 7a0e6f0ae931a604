//! Portable generator files: a header line naming the ring, then one
//! polynomial per line.
//!
//! ```text
//! ring: QQ[x_(1,2), x_(1,3), x_(2,3), t_1, t_2, t_3], order: grevlex
//! t_2*x_(1,3) + t_3*x_(2,3)
//! ```

use pfaffkit::ring::{render_polynomial, CoefficientField, Field, PolyRing, Polynomial};

use crate::error::CliError;

pub fn header<F: Field>(ring: &PolyRing<F>) -> String {
    let vars: Vec<String> = ring.variables().iter().map(|v| v.to_string()).collect();
    format!("ring: {}[{}], order: grevlex", ring.field().name(), vars.join(", "))
}

pub fn write<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> String {
    let mut out = header(ring);
    out.push('\n');
    for g in gens {
        out.push_str(&render_polynomial(ring, g));
        out.push('\n');
    }
    out
}

/// A parsed file: coefficient field, matrix size and the polynomial lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasFile {
    pub field: CoefficientField,
    pub f: usize,
    pub lines: Vec<String>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Usage(format!("generator file: {}", msg.into()))
}

pub fn read(text: &str) -> Result<CasFile, CliError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let head = lines.next().ok_or_else(|| bad("empty"))?;
    let rest = head.strip_prefix("ring:").ok_or_else(|| bad("first line must start with `ring:`"))?.trim();
    let (name, tail) = rest.split_once('[').ok_or_else(|| bad("missing `[` in ring header"))?;
    let (vars, order) = tail.split_once(']').ok_or_else(|| bad("missing `]` in ring header"))?;
    if order.trim().trim_start_matches(',').trim() != "order: grevlex" {
        return Err(bad("only `order: grevlex` is supported"));
    }
    let field = match name.trim() {
        "QQ" => CoefficientField::Rationals,
        other => {
            let p = other
                .strip_prefix("ZZ/")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| bad(format!("unknown coefficient ring `{other}`")))?;
            CoefficientField::from_characteristic(p).map_err(|e| bad(e.to_string()))?
        }
    };
    let f = vars.split(',').filter(|v| v.trim().starts_with("t_")).count();
    Ok(CasFile { field, f, lines: lines.map(str::to_string).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfaffkit::ring::{parse_polynomial, Rationals};

    #[test]
    fn write_then_read() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let g = parse_polynomial(&r, "t_2*x_(1,3) + t_3*x_(2,3)").unwrap();
        let text = write(&r, std::slice::from_ref(&g));
        assert!(text.starts_with("ring: QQ[x_(1,2), x_(1,3), x_(2,3), t_1, t_2, t_3], order: grevlex\n"));
        let back = read(&text).unwrap();
        assert_eq!(back.field, CoefficientField::Rationals);
        assert_eq!(back.f, 3);
        assert_eq!(parse_polynomial(&r, &back.lines[0]).unwrap(), g);
    }

    #[test]
    fn prime_field_header() {
        let c = read("ring: ZZ/7[x_(1,2), t_1, t_2], order: grevlex\n").unwrap();
        assert_eq!(c.field, CoefficientField::PrimeField(7));
        assert!(c.lines.is_empty());
        assert!(read("ring: ZZ/8[x_(1,2), t_1, t_2], order: grevlex").is_err());
        assert!(read("ring: QQ[x_(1,2), t_1, t_2], order: lex").is_err());
    }
}
