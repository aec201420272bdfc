//! Text encodings shared by the CLI, the web demo and the report records.
//!
//! * field element: comma-separated prime-field digits, little-endian
//!   (`"1,2"` is `1 + 2w` in `F_9`); a bare integer is accepted and zero padded;
//! * modulus: comma-separated prime-field coefficients including the leading
//!   1, constant term first (`"2,2,1"` is `X^2 + 2X + 2`);
//! * polynomial: `;`-separated field elements, constant term first.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::field::FieldElement;

fn parse_digits(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

pub fn parse_element(ctx: &FieldCtx, s: &str) -> Result<FieldElement> {
    ctx.from_digits(&parse_digits(s)?)
}

pub fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    parse_digits(s)
}

/// `F_{p^e}`, optionally with an explicit modulus in the text encoding.
pub fn build_field(p: u64, e: usize, modulus: Option<&str>) -> Result<FieldCtx> {
    match modulus {
        Some(m) => FieldCtx::galois(p, e, Some(&parse_modulus(m)?)),
        None => FieldCtx::galois(p, e, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let k = build_field(3, 2, Some("2,2,1")).unwrap();
        for x in k.elements() {
            assert_eq!(parse_element(&k, &x.to_string()).unwrap(), x);
        }
        assert_eq!(parse_element(&k, "2").unwrap(), k.from_int(2));
        assert!(parse_element(&k, "a").is_err());
        assert!(parse_element(&k, "1,-1").is_err());
    }

    #[test]
    fn modulus_degree_must_match() {
        assert!(build_field(3, 3, Some("2,2,1")).is_err());
        assert_eq!(build_field(5, 2, Some("2,4,1")).unwrap().order(), 25);
        assert_eq!(
            build_field(3, 1, None).unwrap(),
            FieldCtx::prime(3).unwrap()
        );
    }
}
