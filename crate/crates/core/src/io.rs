//! Text formats: digraph6, graph6 and the plain arc list.
//!
//! digraph6 is `&`, then `N(n)`, then the `n²` adjacency bits in row-major
//! order packed big-endian into 6-bit groups (each written as `group + 63`).
//! graph6 packs the upper triangle column by column instead. `N(n)` is one
//! byte for `n <= 62`, `~` plus three bytes for `n <= 258047`, and `~~`
//! plus six bytes beyond that.

use crate::digraph::Digraph;
use crate::error::FormatError;
use crate::graph::Graph;

const MAX_ORDER: usize = (1 << 36) - 1;

fn encode_order(n: usize, out: &mut String) -> Result<(), FormatError> {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else if n <= MAX_ORDER {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        return Err(FormatError::OrderTooLarge(n));
    }
    Ok(())
}

/// Returns `(n, header length)`.
fn decode_order(bytes: &[u8]) -> Option<(usize, usize)> {
    let sextet = |b: u8| (63..=126).contains(&b).then(|| (b - 63) as usize);
    let read = |from: usize, len: usize| -> Option<usize> {
        let mut v = 0usize;
        for &b in bytes.get(from..from + len)? {
            v = (v << 6) | sextet(b)?;
        }
        Some(v)
    };
    match bytes.first()? {
        b'~' if bytes.get(1) == Some(&b'~') => Some((read(2, 6)?, 8)),
        b'~' => Some((read(1, 3)?, 4)),
        &b => Some((sextet(b)?, 1)),
    }
}

fn pack_bits(bits: impl Iterator<Item = bool>, out: &mut String) {
    let mut group = 0u8;
    let mut filled = 0;
    for b in bits {
        group = (group << 1) | b as u8;
        filled += 1;
        if filled == 6 {
            out.push((group + 63) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
}

fn unpack_bits(body: &[u8], count: usize) -> Result<Vec<bool>, String> {
    let expected = count.div_ceil(6);
    if body.len() != expected {
        return Err(format!("expected {expected} data bytes, found {}", body.len()));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(format!("byte {b:#04x} outside the printable range"));
        }
        let g = b - 63;
        for i in (0..6).rev() {
            bits.push(g >> i & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err("non-zero padding bits".into());
    }
    bits.truncate(count);
    Ok(bits)
}

pub fn to_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::from("&");
    encode_order(n, &mut s).expect("in-memory digraphs fit the format");
    pack_bits((0..n * n).map(|i| d.has_arc(i / n, i % n)), &mut s);
    s
}

pub fn from_digraph6(text: &str) -> Result<Digraph, FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(">>digraph6<<").unwrap_or(line);
    let body = line.strip_prefix('&').ok_or_else(|| FormatError::Digraph6("missing '&' header".into()))?.as_bytes();
    let (n, used) = decode_order(body).ok_or_else(|| FormatError::Digraph6("bad order field".into()))?;
    let bits = unpack_bits(&body[used..], n * n).map_err(FormatError::Digraph6)?;
    let mut arcs = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        if b {
            let (u, v) = (i / n, i % n);
            if u == v {
                return Err(FormatError::Digraph6(format!("self-loop at vertex {u}")));
            }
            arcs.push((u, v));
        }
    }
    Ok(Digraph::from_arcs(n, arcs)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut s = String::new();
    encode_order(n, &mut s).expect("in-memory graphs fit the format");
    pack_bits((1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)), &mut s);
    s
}

pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
    let (n, used) = decode_order(line).ok_or_else(|| FormatError::Graph6("bad order field".into()))?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let bits = unpack_bits(&line[used..], pairs.len()).map_err(FormatError::Graph6)?;
    Ok(Graph::from_edges(n, pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p))?)
}

/// `n m` on the first line, then one `u v` line per arc.
pub fn to_arc_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.order(), d.arc_count());
    for (u, v) in d.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses the arc list format. Blank lines and `#` comments are ignored.
pub fn from_arc_list(text: &str) -> Result<Digraph, FormatError> {
    let err = |m: String| FormatError::ArcList(m);
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| err("empty input".into()))?;
    let nums = |l: &str| -> Result<Vec<usize>, FormatError> {
        l.split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("not a vertex index: {t:?}"))))
            .collect()
    };
    let h = nums(header)?;
    let [n, m] = h[..] else {
        return Err(err(format!("header must be \"n m\", found {header:?}")));
    };
    let mut arcs = Vec::with_capacity(m);
    for l in lines {
        let p = nums(l)?;
        let [u, v] = p[..] else {
            return Err(err(format!("arc line must be \"u v\", found {l:?}")));
        };
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(err(format!("header announces {m} arcs, found {}", arcs.len())));
    }
    let d = Digraph::from_arcs(n, arcs)?;
    if d.arc_count() != m {
        return Err(err("duplicate arcs".into()));
    }
    Ok(d)
}

/// Guesses the format from the first non-blank character.
pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let t = text.trim_start();
    if t.starts_with('&') || t.starts_with(">>digraph6<<") {
        from_digraph6(t.lines().next().unwrap_or(""))
    } else {
        from_arc_list(text)
    }
}

/// Digraphs serialise as digraph6 strings.
impl serde::Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_digraph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        from_digraph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph6_small_examples() {
        let c3 = Digraph::directed_cycle(3);
        let s = to_digraph6(&c3);
        assert_eq!(s, "&BP_");
        assert_eq!(from_digraph6(&s).unwrap(), c3);
        assert_eq!(to_digraph6(&Digraph::empty(0)), "&?");
        assert_eq!(from_digraph6("&?").unwrap(), Digraph::empty(0));
    }

    #[test]
    fn digraph6_large_order_header() {
        let d = Digraph::directed_cycle(100);
        let s = to_digraph6(&d);
        assert!(s.starts_with("&~"));
        assert_eq!(from_digraph6(&s).unwrap(), d);
    }

    #[test]
    fn digraph6_rejects_garbage() {
        assert!(from_digraph6("BP_").is_err());
        assert!(from_digraph6("&BP").is_err());
        assert!(from_digraph6("&B\x7f_").is_err());
        // bit (0, 0) set
        assert!(from_digraph6("&A_").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        let p = Graph::path(5);
        assert_eq!(from_graph6(&to_graph6(&p)).unwrap(), p);
    }

    #[test]
    fn arc_list_round_trip_and_errors() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(from_arc_list(&to_arc_list(&d)).unwrap(), d);
        assert!(from_arc_list("2 1\n0 0\n").is_err());
        assert!(from_arc_list("2 2\n0 1\n").is_err());
        assert!(from_arc_list("3\n").is_err());
        assert!(from_arc_list("2 1\n0 x\n").is_err());
        assert_eq!(parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap(), Digraph::directed_cycle(3));
        assert_eq!(parse_digraph("&BP_\n").unwrap(), Digraph::directed_cycle(3));
    }
}
