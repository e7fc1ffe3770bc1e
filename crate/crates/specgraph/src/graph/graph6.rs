use super::Graph;
use crate::error::Graph6Reason;
use crate::{Error, Result};

/// Encode in graph6 format; orders up to 62 use the short form.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // 4-byte long form covers n <= 258047, far beyond desk scale.
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut bit = 0u8;
    let mut acc = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            bit += 1;
            if bit == 6 {
                bytes.push(acc + 63);
                acc = 0;
                bit = 0;
            }
        }
    }
    if bit > 0 {
        bytes.push((acc << (6 - bit)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 line (a leading `>>graph6<<` header is accepted).
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let stripped = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let skipped = line.len() - stripped.len();
    let bytes = stripped.as_bytes();
    let at = |i: usize| skipped + i;
    let mut pos = 0usize;
    let next = |pos: &mut usize| -> Result<u8> {
        let b = *bytes.get(*pos).ok_or(Error::Graph6(
            at(*pos),
            Graph6Reason::Truncated {
                expected: *pos + 1,
                found: bytes.len(),
            },
        ))?;
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(at(*pos), Graph6Reason::BadByte(b)));
        }
        *pos += 1;
        Ok(b - 63)
    };
    let first = next(&mut pos)?;
    let n = if first < 63 {
        first as usize
    } else {
        // first == 63 encodes '~': long form
        let b1 = next(&mut pos)?;
        if b1 == 63 {
            // 8-byte form (n > 258047) is out of scope here
            return Err(Error::Graph6(at(1), Graph6Reason::BadOrder));
        }
        let b2 = next(&mut pos)?;
        let b3 = next(&mut pos)?;
        ((b1 as usize) << 12) | ((b2 as usize) << 6) | (b3 as usize)
    };
    if n == 0 {
        return Err(Error::Graph6(at(0), Graph6Reason::BadOrder));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Graph6(
            at(bytes.len().min(pos)),
            Graph6Reason::Truncated {
                expected: nbytes,
                found: bytes.len() - pos,
            },
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let data_start = pos;
    for byte_k in 0..nbytes {
        let v = next(&mut pos)?;
        for shift in (0..6).rev() {
            let b = (v >> shift) & 1;
            if bit_index >= nbits {
                if b != 0 {
                    return Err(Error::Graph6(
                        at(data_start + byte_k),
                        Graph6Reason::BadPadding,
                    ));
                }
                continue;
            }
            if b == 1 {
                let (i, j) = bit_to_pair(bit_index);
                g.add_edge(i, j)?;
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle bit layout.
fn bit_to_pair(mut k: usize) -> (usize, usize) {
    let mut j = 1usize;
    while k >= j {
        k -= j;
        j += 1;
    }
    (k, j)
}

/// Parse a graph6 file: one graph per line, blank lines skipped.
pub fn read_graph6_file(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, FamilySpec};
    use proptest::prelude::*;

    #[test]
    fn k3_is_bw() {
        let k3 = build_named(&FamilySpec::Complete { n: 3 }).unwrap();
        assert_eq!(encode_graph6(&k3), "Bw");
        assert_eq!(decode_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn header_accepted() {
        let k3 = build_named(&FamilySpec::Complete { n: 3 }).unwrap();
        assert_eq!(decode_graph6(">>graph6<<Bw").unwrap(), k3);
    }

    #[test]
    fn five_vertex_codes_roundtrip() {
        for g in [
            build_named(&FamilySpec::Path { n: 5 }).unwrap(),
            build_named(&FamilySpec::Cycle { n: 5 }).unwrap(),
            build_named(&FamilySpec::Star { n: 5 }).unwrap(),
        ] {
            let code = crate::graph::encode_graph6(&g);
            assert_eq!(code.as_bytes()[0], b'D');
            assert_eq!(decode_graph6(&code).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        // bad byte (space) inside the data section
        match decode_graph6("D? {") {
            Err(Error::Graph6(off, _)) => assert!(off > 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // truncated
        assert!(decode_graph6("D").is_err());
        assert!(decode_graph6("").is_err());
    }

    #[test]
    fn long_form_roundtrip() {
        let g = build_named(&FamilySpec::Cycle { n: 70 }).unwrap();
        let code = encode_graph6(&g);
        assert_eq!(code.as_bytes()[0], b'~');
        assert_eq!(decode_graph6(&code).unwrap(), g);
    }

    proptest! {
        #[test]
        fn random_graph_roundtrip(n in 1usize..20, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u+1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let code = encode_graph6(&g);
            prop_assert_eq!(decode_graph6(&code).unwrap(), g);
        }
    }
}
