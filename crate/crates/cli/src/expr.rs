//! The monomial grammar accepted by `sympair pair`.
//!
//! A monomial is a product of tokens separated by spaces or `*`:
//!
//! * `a`, `a^n`: powers of `α`
//! * `d[i]`, `d[i]^n`: the twisted classes `δ_i`
//! * `x[i]`, `x[i]^n`: the classes `ξ_i`
//! * `ab[i,j,k]`: the Newstead monomial `α^i β^j γ^k`, not mixable with the above
//! * `psi`, `psi^p`: `p` pairs `ψ_1ψ_{1+g} ... ψ_pψ_{p+g}`

use std::fmt;

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Monomial {
    pub alpha: u32,
    pub delta: Vec<u32>,
    pub xi: Vec<u32>,
    /// Exponents of `α, β, γ` when the Newstead form is used.
    pub newstead: Option<[u32; 3]>,
    pub psi_pairs: u32,
}

fn bad(token: &str, why: &str) -> CliError {
    CliError::Invalid(format!("bad token {token:?} in expression: {why}"))
}

fn number(s: &str, token: &str) -> Result<u32, CliError> {
    s.trim()
        .parse()
        .map_err(|_| bad(token, "expected a nonnegative integer"))
}

/// Splits `name[args]^power` into its pieces.
fn split_token(token: &str) -> Result<(&str, Option<&str>, u32), CliError> {
    let (body, power) = match token.rsplit_once('^') {
        Some((b, p)) if !p.contains(']') => (b, number(p, token)?),
        _ => (token, 1),
    };
    match body.split_once('[') {
        Some((name, rest)) => {
            let args = rest
                .strip_suffix(']')
                .ok_or_else(|| bad(token, "missing ']'"))?;
            Ok((name, Some(args), power))
        }
        None => Ok((body, None, power)),
    }
}

impl Monomial {
    pub fn parse(input: &str) -> Result<Self, CliError> {
        let mut m = Monomial::default();
        let tokens: Vec<&str> = input
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(CliError::Invalid("empty expression".into()));
        }
        for token in tokens {
            let (name, args, power) = split_token(token)?;
            match (name, args) {
                ("a", None) => m.alpha += power,
                ("psi", None) => m.psi_pairs += power,
                ("d" | "x", Some(i)) => {
                    let i = number(i, token)?;
                    if i == 0 {
                        return Err(bad(token, "class indices start at 1"));
                    }
                    let list = if name == "d" { &mut m.delta } else { &mut m.xi };
                    list.extend(std::iter::repeat_n(i, power as usize));
                }
                ("ab", Some(args)) => {
                    let v: Vec<u32> = args
                        .split(',')
                        .map(|s| number(s, token))
                        .collect::<Result<_, _>>()?;
                    let [i, j, k] = v[..] else {
                        return Err(bad(token, "expected ab[i,j,k]"));
                    };
                    let acc = m.newstead.get_or_insert([0; 3]);
                    acc[0] += i * power;
                    acc[1] += j * power;
                    acc[2] += k * power;
                }
                _ => return Err(bad(token, "unknown class")),
            }
        }
        if m.newstead.is_some() && (m.alpha > 0 || !m.delta.is_empty() || !m.xi.is_empty()) {
            return Err(CliError::Invalid(
                "ab[i,j,k] cannot be combined with a, d[i] or x[i]".into(),
            ));
        }
        m.delta.sort_unstable_by(|a, b| b.cmp(a));
        m.xi.sort_unstable_by(|a, b| b.cmp(a));
        Ok(m)
    }

    /// Complex degree of the class, ψ pairs excluded.
    pub fn degree(&self) -> u32 {
        match self.newstead {
            Some([i, j, k]) => i + 2 * j + 3 * k,
            None => self.alpha + self.delta.iter().sum::<u32>() + self.xi.iter().sum::<u32>(),
        }
    }
}

fn grouped(f: &mut fmt::Formatter<'_>, name: &str, parts: &[u32], first: &mut bool) -> fmt::Result {
    let mut i = 0;
    while i < parts.len() {
        let n = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        if !*first {
            write!(f, " ")?;
        }
        *first = false;
        write!(f, "{name}[{}]", parts[i])?;
        if n > 1 {
            write!(f, "^{n}")?;
        }
        i += n;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some([i, j, k]) = self.newstead {
            write!(f, "ab[{i},{j},{k}]")?;
            first = false;
        }
        if self.alpha > 0 {
            write!(f, "a^{}", self.alpha)?;
            first = false;
        }
        grouped(f, "d", &self.delta, &mut first)?;
        grouped(f, "x", &self.xi, &mut first)?;
        if self.psi_pairs > 0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "psi^{}", self.psi_pairs)?;
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let m = Monomial::parse("a^5 d[2] d[8]").unwrap();
        assert_eq!(m.alpha, 5);
        assert_eq!(m.delta, vec![8, 2]);
        assert_eq!(m.to_string(), "a^5 d[8] d[2]");
        assert_eq!(m.degree(), 15);

        let m = Monomial::parse("x[2]^2*x[1] a psi").unwrap();
        assert_eq!(m.xi, vec![2, 2, 1]);
        assert_eq!(m.to_string(), "a^1 x[2]^2 x[1] psi^1");

        let m = Monomial::parse("ab[3,0,0]").unwrap();
        assert_eq!(m.newstead, Some([3, 0, 0]));
        assert_eq!(m.degree(), 3);
    }

    #[test]
    fn rejects_nonsense() {
        for bad in ["", "q", "d[0]", "d[2", "ab[1,2]", "ab[1,0,0] a", "a^x"] {
            assert!(Monomial::parse(bad).is_err(), "{bad}");
        }
    }
}
