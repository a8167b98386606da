//! Line-based text formats for automata, transition systems, relations and
//! partitions.
//!
//! DFA files:
//!
//! ```text
//! dfa <nstates> <nsymbols>
//! symbols <tok_0> ... <tok_{k-1}>
//! init <state>
//! accept <state> ...
//! trans <src> <tok> <dst>
//! ...
//! ```
//!
//! Missing `trans` entries are routed to an extra sink state. LTS files:
//!
//! ```text
//! lts <nstates> <ntransitions> <init>
//! (<src>, "<label>", <dst>)
//! ...
//! ```
//!
//! Labels read from an LTS file are indexed in lexicographic order of their
//! text. Writers emit transitions sorted by `(src, label index, dst)`. `#`
//! starts a comment in both formats.

use std::fmt::Write;

use crate::automata::{validate_alphabet, Dfa};
use crate::error::{Error, Result};
use crate::lts::{Lts, Transition};
use crate::sim::{Partition, SimRelation};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        }
        .trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

fn expect_keyword<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    last_line: usize,
) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| Error::parse(last_line, format!("missing `{keyword}` line")))?;
    let mut tokens = text.split_whitespace();
    match tokens.next() {
        Some(k) if k == keyword => Ok((line, tokens.collect())),
        Some(other) => Err(Error::parse(
            line,
            format!("expected `{keyword}`, found `{other}`"),
        )),
        None => unreachable!("content lines are non-empty"),
    }
}

fn state_in_range(line: usize, state: usize, count: usize) -> Result<usize> {
    if state < count {
        Ok(state)
    } else {
        Err(Error::parse(
            line,
            format!("state {state} out of range (0..{count})"),
        ))
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = content_lines(text);

    let (line, header) = expect_keyword(&mut lines, "dfa", 1)?;
    if header.len() != 2 {
        return Err(Error::parse(line, "expected `dfa <nstates> <nsymbols>`"));
    }
    let num_states = number(line, header.first().copied(), "state count")?;
    let num_symbols = number(line, header.get(1).copied(), "symbol count")?;
    if num_states == 0 {
        return Err(Error::parse(line, "a DFA needs at least one state"));
    }

    let (line, symbols) = expect_keyword(&mut lines, "symbols", line)?;
    if symbols.len() != num_symbols {
        return Err(Error::parse(
            line,
            format!("declared {num_symbols} symbols, found {}", symbols.len()),
        ));
    }
    let alphabet: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
    validate_alphabet(&alphabet).map_err(|e| Error::parse(line, e.to_string()))?;

    let (line, init) = expect_keyword(&mut lines, "init", line)?;
    if init.len() != 1 {
        return Err(Error::parse(line, "expected `init <state>`"));
    }
    let initial = state_in_range(
        line,
        number(line, init.first().copied(), "state")?,
        num_states,
    )?;

    let (mut last, accept) = expect_keyword(&mut lines, "accept", line)?;
    let accepting = accept
        .iter()
        .map(|tok| state_in_range(last, number(last, Some(tok), "state")?, num_states))
        .collect::<Result<Vec<_>>>()?;

    let mut transitions = Vec::new();
    let mut seen = vec![false; num_states * num_symbols];
    for (line, text) in lines {
        last = line;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.first() != Some(&"trans") || tokens.len() != 4 {
            return Err(Error::parse(line, "expected `trans <src> <tok> <dst>`"));
        }
        let src = state_in_range(line, number(line, Some(tokens[1]), "state")?, num_states)?;
        let sym = alphabet
            .iter()
            .position(|s| s == tokens[2])
            .ok_or_else(|| Error::parse(line, format!("unknown symbol `{}`", tokens[2])))?;
        let dst = state_in_range(line, number(line, Some(tokens[3]), "state")?, num_states)?;
        let cell = &mut seen[src * num_symbols + sym];
        if *cell {
            return Err(Error::parse(
                line,
                format!("duplicate transition for state {src} on `{}`", tokens[2]),
            ));
        }
        *cell = true;
        transitions.push((src, sym, dst));
    }
    Dfa::from_partial(num_states, alphabet, transitions, accepting, initial)
        .map_err(|e| Error::parse(last, e.to_string()))
}

pub fn write_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    let k = dfa.alphabet().len();
    writeln!(out, "dfa {} {}", dfa.num_states(), k).unwrap();
    let mut line = String::from("symbols");
    for s in dfa.alphabet() {
        line.push(' ');
        line.push_str(s);
    }
    writeln!(out, "{line}").unwrap();
    writeln!(out, "init {}", dfa.initial()).unwrap();
    let mut line = String::from("accept");
    for q in dfa.accepting_states() {
        write!(line, " {q}").unwrap();
    }
    writeln!(out, "{line}").unwrap();
    for q in 0..dfa.num_states() {
        for (a, sym) in dfa.alphabet().iter().enumerate() {
            writeln!(out, "trans {q} {sym} {}", dfa.next(q, a)).unwrap();
        }
    }
    out
}

fn parse_transition_line(line: usize, text: &str) -> Result<(usize, String, usize)> {
    let malformed = || Error::parse(line, "expected `(<src>, \"<label>\", <dst>)`");
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(malformed)?;
    let (src, rest) = inner.split_once(',').ok_or_else(malformed)?;
    let rest = rest.trim_start().strip_prefix('"').ok_or_else(malformed)?;
    let (label, rest) = rest.split_once('"').ok_or_else(malformed)?;
    let dst = rest.trim_start().strip_prefix(',').ok_or_else(malformed)?;
    let src = number(line, Some(src.trim()), "source state")?;
    let dst = number(line, Some(dst.trim()), "target state")?;
    Ok((src, label.to_string(), dst))
}

pub fn parse_lts(text: &str) -> Result<Lts> {
    let mut lines = content_lines(text);
    let (line, header) = expect_keyword(&mut lines, "lts", 1)?;
    if header.len() != 3 {
        return Err(Error::parse(
            line,
            "expected `lts <nstates> <ntransitions> <init>`",
        ));
    }
    let num_states = number(line, Some(header[0]), "state count")?;
    let declared = number(line, Some(header[1]), "transition count")?;
    let initial = state_in_range(
        line,
        number(line, Some(header[2]), "initial state")?,
        num_states,
    )?;

    let mut raw = Vec::with_capacity(declared);
    let mut last = line;
    for (line, text) in lines {
        last = line;
        let (src, label, dst) = parse_transition_line(line, text)?;
        state_in_range(line, src, num_states)?;
        state_in_range(line, dst, num_states)?;
        raw.push((src, label, dst));
    }
    if raw.len() != declared {
        return Err(Error::parse(
            last,
            format!("declared {declared} transitions, found {}", raw.len()),
        ));
    }

    let mut labels: Vec<String> = raw.iter().map(|(_, l, _)| l.clone()).collect();
    labels.sort();
    labels.dedup();
    let transitions = raw
        .into_iter()
        .map(|(src, label, dst)| {
            let idx = labels.binary_search(&label).expect("label collected above");
            Transition::new(src, idx, dst)
        })
        .collect();
    Lts::new(num_states, labels, transitions, initial)
        .map_err(|e| Error::parse(last, e.to_string()))
}

pub fn write_lts(lts: &Lts) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "lts {} {} {}",
        lts.num_states(),
        lts.num_transitions(),
        lts.initial()
    )
    .unwrap();
    for t in lts.transitions() {
        writeln!(
            out,
            "({}, \"{}\", {})",
            t.source,
            lts.labels()[t.label],
            t.target
        )
        .unwrap();
    }
    out
}

/// One `(<s>, <t>)` line per pair, sorted lexicographically.
pub fn write_relation(relation: &SimRelation) -> String {
    let mut out = String::new();
    for (s, t) in relation.pairs() {
        writeln!(out, "({s}, {t})").unwrap();
    }
    out
}

/// One line per block with its states ascending; blocks ordered by their
/// smallest state.
pub fn write_partition(partition: &Partition) -> String {
    let mut out = String::new();
    for block in partition.blocks() {
        let line: Vec<String> = block.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EVEN_ONES: &str = "\
# words with an even number of 1s
dfa 2 2
symbols 0 1
init 0
accept 0
trans 0 0 0
trans 0 1 1
trans 1 0 1   # stay
trans 1 1 0
";

    #[test]
    fn dfa_round_trip_is_bit_exact() {
        let dfa = parse_dfa(EVEN_ONES).unwrap();
        assert_eq!(dfa.num_states(), 2);
        let written = write_dfa(&dfa);
        let canonical: String = EVEN_ONES
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| format!("{}\n", l.split('#').next().unwrap().trim_end()))
            .collect();
        assert_eq!(written, canonical);
        assert_eq!(write_dfa(&parse_dfa(&written).unwrap()), written);
    }

    #[test]
    fn missing_transitions_go_to_sink() {
        let dfa = parse_dfa("dfa 2 2\nsymbols a b\ninit 0\naccept 1\ntrans 0 a 1\n").unwrap();
        assert_eq!(dfa.num_states(), 3);
        assert_eq!(dfa.next(0, 1), 2);
        assert_eq!(dfa.next(1, 0), 2);
        assert!(write_dfa(&dfa).starts_with("dfa 3 2\n"));
    }

    #[test]
    fn empty_accept_line() {
        let dfa = parse_dfa("dfa 1 1\nsymbols a\ninit 0\naccept\ntrans 0 a 0\n").unwrap();
        assert_eq!(dfa.num_accepting(), 0);
        assert!(write_dfa(&dfa).contains("\naccept\n"));
    }

    #[test]
    fn dfa_errors_carry_line_numbers() {
        let cases = [
            ("dfa 2\n", 1),
            ("dfa 1 1\nsymbols a b\n", 2),
            ("dfa 1 1\nsymbols a\ninit 3\naccept\n", 3),
            ("dfa 1 1\nsymbols a\ninit 0\naccept\ntrans 0 z 0\n", 5),
            (
                "dfa 1 1\nsymbols a\ninit 0\naccept\ntrans 0 a 0\ntrans 0 a 0\n",
                6,
            ),
            ("dfa 1 1\nsymbols ✓\ninit 0\naccept\n", 2),
            ("dfa 1 1\nsymbols a\naccept\n", 3),
        ];
        for (text, expected) in cases {
            match parse_dfa(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn lts_round_trip() {
        let text = "lts 3 4 0\n(0, \"a\", 1)\n(0, \"b\", 2)\n(1, \"a\", 1)\n(2, \"✓\", 0)\n";
        let lts = parse_lts(text).unwrap();
        assert_eq!(lts.labels(), ["a", "b", "✓"]);
        assert_eq!(write_lts(&lts), text);
    }

    #[test]
    fn lts_labels_indexed_lexicographically() {
        let lts = parse_lts("lts 2 2 1\n(1, \"b\", 0)\n(0, \"a\", 1)\n").unwrap();
        assert_eq!(lts.labels(), ["a", "b"]);
        assert_eq!(lts.initial(), 1);
        assert_eq!(write_lts(&lts), "lts 2 2 1\n(0, \"a\", 1)\n(1, \"b\", 0)\n");
    }

    #[test]
    fn lts_errors() {
        for (text, expected) in [
            ("lts 2 1\n", 1),
            ("lts 2 1 0\n(0, a, 1)\n", 2),
            ("lts 2 1 0\n(0, \"a\", 7)\n", 2),
            ("lts 2 2 0\n(0, \"a\", 1)\n", 2),
            ("lts 2 1 5\n", 1),
        ] {
            match parse_lts(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn relation_and_partition_output() {
        let mut rel = SimRelation::empty(3);
        rel.insert(2, 0);
        rel.insert(0, 1);
        rel.insert(0, 0);
        assert_eq!(write_relation(&rel), "(0, 0)\n(0, 1)\n(2, 0)\n");
        let partition = Partition::from_block_of(&[1, 0, 1, 2]);
        assert_eq!(write_partition(&partition), "0 2\n1\n3\n");
    }
}
