//! File formats: lossless round trips, precise parse errors, and frozen
//! digests that pin the corpus serializations and classifications.

mod support;

use latnorm::analysis;
use latnorm::corpus;
use latnorm::io::dot::write_dot;
use latnorm::io::lat::{parse_lattice, write_lattice};
use latnorm::io::table::{parse_table, write_table};
use latnorm::io::ParseError;
use latnorm::tnorm::{t_meet, t_weakest};
use latnorm::FiniteLattice;
use sha2::{Digest, Sha256};

/// SHA-256 of each corpus entry's serialized form. These are frozen: a
/// mismatch means a reference lattice changed, which is never routine.
const CORPUS_DIGESTS: [(&str, &str); 16] = [
    ("c2", "b61f6f94a03786b6986c3414c20c8f9b63b0c6c5447ff8cead82ef2af36f2f2a"),
    ("c3", "363bb2aeea762ee59c46336d7d4417329c9a764c67a8995a2245eba724dae287"),
    ("c4", "bd48ebcfef62a31e63a3bb4c33c4d4aa0ce6c5d7d1fa9ad60f14d33cddc93ac2"),
    ("c5", "ae6dea13fa3314dee8539d1dfc072f82cb87e531ee1d89aed46c2568b88ce02b"),
    ("b2", "612160a2da97dabdd67a7125cc157ddb37447755b4b6c8cc163b65f38af50c3f"),
    ("b3", "e34fd04b94ad0f212a7ffe211b53a7ab6fa0741034b173e8e9f0572f7d704cbb"),
    ("n5", "3b247028f7d29427afcf672d0b06eac6e5ebb42fc5f2105dd1bb6d4e1a453881"),
    ("m3", "a52b6a3c3ced837f4f301201cc9096763fdc7fed1f9a11e3e5034d805bee0ef6"),
    ("m3_2", "70d20b701ac259299dcbfde151efa7a58909cf88e51a857ecf9f5979ee2318a8"),
    ("m3_4", "ecb4257d53c2f891958835705ec582a422846f6a47a06b59a81609afcb678446"),
    ("s72", "373960ad89486bfb7c3d03ddf87a8dfea461e9d937ebb867918a557716b3e5b9"),
    ("s72_star", "96bb81f333a274676454a8c4e385f6b0b64d7ba20873b71a675d1f980ad02818"),
    ("s72_fix", "92faad4a38d661d65033ab495c0ba08ad47963400ad96ee02187419c683f71b2"),
    ("pd10", "dc45ca9eae83827c5a6c7d16867d17dc374f68c013a1b9022edf45b4d8b6504f"),
    ("pm13", "c1e76904ade318828d621f7f95cbab0eafe67d6e11c8d12f49daa646bf805e5e"),
    ("pm10", "923e92b6f8c59a97998ff83aff05e05de9a600c9cef5b8e143edc2b4da3baacc"),
];

/// SHA-256 of the one-line-per-entry classification summary of the whole
/// corpus: sizes, heights, cover counts, and every structural verdict.
const CORPUS_FINGERPRINT: &str =
    "14674955e5ba71957679ba6cdca1ea0ee65f858e21f508a84980d373380b7187";

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn lattice_files_round_trip_exactly() {
    for e in corpus::entries() {
        let l = e.build();
        let text = write_lattice(&l);
        let back = parse_lattice(&text).unwrap();
        assert_eq!(l, back, "{}", e.name);
        // A second write of the reparsed lattice is byte-identical.
        assert_eq!(write_lattice(&back), text, "{}", e.name);
    }
}

#[test]
fn lattice_parser_accepts_noise_and_redundant_generators() {
    let text = "\n# diamond with clutter\n  format 1\n\nelements 0 x y z 1\n\
                cover 0 x\ncover 0 y\ncover 0 z\ncover x 1\ncover y 1\ncover z 1\n\
                # a redundant generator pair, not a covering pair\ncover 0 1\n";
    let l = parse_lattice(text).unwrap();
    assert_eq!(l.n(), 5);
    // The redundant pair is normalized away by the cover rebuild.
    assert_eq!(l.covers().len(), 6);
    assert_eq!(l.covers().to_vec(), support::naive_covers(&l));
}

#[test]
fn lattice_parse_errors_point_at_the_offending_line() {
    let e = parse_lattice("elements a b\n\ncover a b\ncover a z\n").unwrap_err();
    assert!(matches!(e, ParseError::UnknownLabel { line: 4, ref label } if label == "z"));

    let e = parse_lattice("elements a b\ncover a\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 2, .. }));

    let e = parse_lattice("elements a b\nformat 1\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 2, .. }));

    let e = parse_lattice("elements a b\nelements a b\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 2, .. }));

    let e = parse_lattice("wibble\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 1, .. }));

    let e = parse_lattice("# nothing here\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { .. }));
}

#[test]
fn tables_round_trip_across_corpus_lattices() {
    for e in corpus::entries() {
        let l = e.build();
        for t in [t_meet(&l), t_weakest(&l)] {
            let text = write_table(&l, &t);
            assert_eq!(parse_table(&l, &text).unwrap(), t, "{}", e.name);
        }
    }
}

#[test]
fn table_parse_errors_point_at_the_offending_cell() {
    let l = FiniteLattice::chain(3);
    let e = parse_table(&l, "T,0,1,2\n0,0,0,0\n1,0,bogus,1\n2,0,1,2\n").unwrap_err();
    assert!(matches!(e, ParseError::UnknownLabel { line: 3, ref label } if label == "bogus"));

    let e = parse_table(&l, "T,0,1,2\n0,0,0\n1,0,1,1\n2,0,1,2\n").unwrap_err();
    assert!(matches!(e, ParseError::ShapeMismatch(_)));

    let e = parse_table(&l, "T,0,1\n0,0,0\n1,0,1\n").unwrap_err();
    assert!(matches!(e, ParseError::ShapeMismatch(_)));
}

#[test]
fn corpus_serializations_are_frozen() {
    assert_eq!(corpus::entries().len(), CORPUS_DIGESTS.len());
    for (e, (name, want)) in corpus::entries().iter().zip(CORPUS_DIGESTS) {
        assert_eq!(e.name, name, "corpus order changed");
        let got = hex(&Sha256::digest(write_lattice(&e.build()).as_bytes()));
        assert_eq!(
            got, want,
            "{name}: the serialized reference lattice changed"
        );
    }
}

#[test]
fn corpus_classification_fingerprint_is_frozen() {
    let mut fp = String::new();
    for e in corpus::entries() {
        let l = e.build();
        let r = analysis::classify(&l);
        fp.push_str(&format!(
            "{} n={} height={} covers={} modular={} distributive={} one_distributive={} \
             atomistic={} boolean={} complemented={} rectangular={} forbidden={}\n",
            e.name,
            l.n(),
            l.height(l.top()),
            l.covers().len(),
            r.modular.holds,
            r.distributive.holds,
            r.one_distributive.holds,
            r.atomistic.holds,
            r.boolean.holds,
            r.complemented.holds,
            r.rectangular.is_some(),
            r.forbidden_1_sublattice
                .as_ref()
                .map(|w| w.law.to_string())
                .unwrap_or_else(|| "-".into()),
        ));
    }
    assert_eq!(
        hex(&Sha256::digest(fp.as_bytes())),
        CORPUS_FINGERPRINT,
        "corpus classification changed; summary was:\n{fp}"
    );
}

#[test]
fn dot_output_names_every_element_and_cover() {
    let l = corpus::by_name("m3").unwrap().build();
    let dot = write_dot(&l, &[l.top()]);
    for x in l.elements() {
        assert!(dot.contains(&format!("\"{}\"", l.label(x))));
    }
    for &(lo, hi) in l.covers() {
        assert!(dot.contains(&format!("\"{}\" -> \"{}\"", l.label(lo), l.label(hi))));
    }
}
