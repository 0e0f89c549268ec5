//! Line-oriented lattice files:
//!
//! ```text
//! # any whole-line comment
//! format 1
//! elements 0 a b 1
//! cover 0 a
//! cover a 1
//! ```
//!
//! The `format` line is optional on input and always written on output.
//! `elements` must come before any `cover` line; cover lines are treated
//! as order generators, so redundant pairs are accepted and normalized
//! away on rebuild.

use crate::io::ParseError;
use crate::lattice::FiniteLattice;

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut format_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "format" => {
                if format_seen || labels.is_some() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: "format line must come first, once".into(),
                    });
                }
                format_seen = true;
                let v: Vec<&str> = parts.collect();
                if v != ["1"] {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: format!("unsupported format `{}`", v.join(" ")),
                    });
                }
            }
            "elements" => {
                if labels.is_some() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: "duplicate elements line".into(),
                    });
                }
                let found: Vec<String> = parts.map(str::to_string).collect();
                if found.is_empty() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: "elements line lists no labels".into(),
                    });
                }
                labels = Some(found);
            }
            "cover" => {
                let Some(known) = labels.as_ref() else {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: "cover line before elements line".into(),
                    });
                };
                let fields: Vec<&str> = parts.collect();
                let [lo, hi] = fields[..] else {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        msg: "cover line needs exactly two labels".into(),
                    });
                };
                for lab in [lo, hi] {
                    if !known.iter().any(|k| k == lab) {
                        return Err(ParseError::UnknownLabel {
                            line: lineno,
                            label: lab.to_string(),
                        });
                    }
                }
                covers.push((lo.to_string(), hi.to_string()));
            }
            other => {
                return Err(ParseError::Syntax {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    let Some(labels) = labels else {
        return Err(ParseError::Syntax {
            line: text.lines().count(),
            msg: "missing elements line".into(),
        });
    };
    Ok(FiniteLattice::build_from_covers(&labels, &covers)?)
}

pub fn write_lattice(l: &FiniteLattice) -> String {
    let mut out = String::from("format 1\nelements");
    for x in l.elements() {
        out.push(' ');
        out.push_str(l.label(x));
    }
    out.push('\n');
    for &(lo, hi) in l.covers() {
        out.push_str(&format!("cover {} {}\n", l.label(lo), l.label(hi)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let l = FiniteLattice::boolean_lattice(2);
        let text = write_lattice(&l);
        let back = parse_lattice(&text).unwrap();
        assert_eq!(l, back);
    }

    #[test]
    fn format_line_is_optional_and_comments_skip() {
        let text = "# a square\nelements 0 p q 1\ncover 0 p\ncover 0 q\ncover p 1\ncover q 1\n";
        let l = parse_lattice(text).unwrap();
        assert_eq!(l.n(), 4);
        assert_eq!(l.label(l.top()), "1");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_lattice("elements a b\ncover a z\n").unwrap_err();
        assert!(matches!(e, ParseError::UnknownLabel { line: 2, ref label } if label == "z"));
        let e = parse_lattice("cover a b\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 1, .. }));
        let e = parse_lattice("format 2\nelements a\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 1, .. }));
    }

    #[test]
    fn non_lattice_input_propagates_the_shape_error() {
        let text = "elements a b\n";
        assert!(matches!(
            parse_lattice(text),
            Err(ParseError::Lattice(_))
        ));
    }
}
