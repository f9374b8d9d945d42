//! Reader for the ASCII polynomial syntax, e.g. `3*u_s1^2*u_t2^-1 - 1`.

use num_bigint::BigInt;

use super::laurent::{LaurentPoly, Vars};
use super::RingError;

pub(crate) fn parse_poly(s: &str, vars: &Vars) -> Result<LaurentPoly, RingError> {
    let err = |msg: &str| RingError::Parse { input: s.to_string(), msg: msg.to_string() };
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(err("empty input"));
    }
    let mut acc = LaurentPoly::zero(vars);
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(err("expected '+' or '-' between terms"));
        }
        // A term runs until the next '+'/'-' that is not an exponent sign.
        let start = i;
        while i < chars.len() && !((chars[i] == '+' || chars[i] == '-') && chars[i - 1] != '^') {
            i += 1;
        }
        let term: String = chars[start..i].iter().collect();
        if term.is_empty() {
            return Err(err("dangling sign"));
        }
        let mut coeff = BigInt::from(sign);
        let mut exps = vec![0i32; vars.len()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                let n: BigInt = factor.parse().map_err(|_| err("bad integer"))?;
                coeff *= n;
                continue;
            }
            let (name, pow) = match factor.split_once('^') {
                Some((n, p)) => (n, p.parse::<i32>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let k = vars.iter().position(|v| v == name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
            exps[k] += pow;
        }
        acc = acc.try_add(&LaurentPoly::monomial(vars, coeff, exps)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    #[test]
    fn reads_the_documented_example() {
        let v: Vars = Arc::new(vec!["u_s1".into(), "u_t2".into()]);
        let p = parse_poly("3*u_s1^2*u_t2^-1 - 1", &v).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "3*u_s1^2*u_t2^-1 - 1");
    }

    #[test]
    fn leading_minus_and_repeated_factors() {
        let v: Vars = Arc::new(vec!["x".into(), "y".into()]);
        let p = parse_poly("-x*x*y^-1 + 2*3", &v).unwrap();
        assert_eq!(p.to_string(), "-x^2*y^-1 + 6");
    }

    #[test]
    fn rejects_garbage() {
        let v: Vars = Arc::new(vec!["x".into()]);
        assert!(parse_poly("x +", &v).is_err());
        assert!(parse_poly("z", &v).is_err());
        assert!(parse_poly("x^a", &v).is_err());
        assert!(parse_poly("", &v).is_err());
    }
}
