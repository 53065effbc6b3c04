//! Emitters for tables and keyed scalar maps.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};
use spinhecke::CharacterTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Compact JSON with `", "` and `": "` separators.
struct Spaced;

impl Formatter for Spaced {
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub fn to_json(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Spaced);
    v.serialize(&mut ser).expect("serializing a Value cannot fail");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

fn pairs_object(pairs: &[(String, String)]) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.clone(), Value::String(v.clone()));
    }
    Value::Object(m)
}

/// `x^12*y` style scalar string to LaTeX math.
pub fn latex_scalar(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                out.push_str("^{");
                if chars.peek() == Some(&'-') {
                    out.push('-');
                    chars.next();
                }
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    out.push(d);
                    chars.next();
                }
                out.push('}');
            }
            _ => out.push(c),
        }
    }
    out
}

fn latex_partition(p: &str) -> String {
    format!("({p})")
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv writes UTF-8")
}

/// A keyed scalar map in the requested format; `key_name` labels the key
/// column for CSV and LaTeX.
pub fn render_pairs(pairs: &[(String, String)], key_name: &str, format: Format) -> String {
    match format {
        Format::Json => to_json(&pairs_object(pairs)) + "\n",
        Format::Csv => {
            let rows: Vec<Vec<String>> = pairs.iter().map(|(k, v)| vec![k.clone(), v.clone()]).collect();
            csv_string(&[key_name.to_string(), "value".to_string()], &rows)
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{c|c}\n");
            s.push_str(&format!("${key_name}$ & value \\\\\n\\hline\n"));
            for (k, v) in pairs {
                s.push_str(&format!("${}$ & ${}$ \\\\\n", latex_partition(k), latex_scalar(v)));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    }
}

pub fn render_table(t: &CharacterTable, format: Format) -> String {
    let cols: Vec<String> = t.cols.iter().map(ToString::to_string).collect();
    match format {
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .zip(&t.entries)
                .map(|(lambda, row)| {
                    let pairs: Vec<(String, String)> =
                        cols.iter().cloned().zip(row.iter().map(ToString::to_string)).collect();
                    let mut m = Map::new();
                    m.insert("lambda".into(), Value::String(lambda.to_string()));
                    m.insert("values".into(), pairs_object(&pairs));
                    Value::Object(m)
                })
                .collect();
            let mut m = Map::new();
            m.insert("n".into(), Value::from(t.n));
            m.insert("rows".into(), Value::Array(rows));
            to_json(&Value::Object(m)) + "\n"
        }
        Format::Csv => {
            let header: Vec<String> = std::iter::once("lambda".to_string()).chain(cols).collect();
            let rows: Vec<Vec<String>> = t
                .rows
                .iter()
                .zip(&t.entries)
                .map(|(lambda, row)| {
                    std::iter::once(lambda.to_string())
                        .chain(row.iter().map(ToString::to_string))
                        .collect()
                })
                .collect();
            csv_string(&header, &rows)
        }
        Format::Latex => {
            let mut s = format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(cols.len()));
            s.push_str("$\\lambda \\backslash \\nu$");
            for c in &cols {
                s.push_str(&format!(" & ${}$", latex_partition(c)));
            }
            s.push_str(" \\\\\n\\hline\n");
            for (lambda, row) in t.rows.iter().zip(&t.entries) {
                s.push_str(&format!("${}$", latex_partition(&lambda.to_string())));
                for x in row {
                    s.push_str(&format!(" & ${}$", latex_scalar(&x.to_string())));
                }
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaced_json() {
        let pairs = vec![("1,1".to_string(), "(v-1)/2".to_string()), ("3".to_string(), "0".to_string())];
        assert_eq!(to_json(&pairs_object(&pairs)), r#"{"1,1": "(v-1)/2", "3": "0"}"#);
    }

    #[test]
    fn latex_exponents() {
        assert_eq!(latex_scalar("-v^12+2*v^-1"), "-v^{12}+2v^{-1}");
    }
}
