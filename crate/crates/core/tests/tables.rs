use rectgen::tables::GENERIC_BASE;

/// The pattern-avoidance table as transcribed separately, one row per line:
/// the avoided pattern numbers, then the counts for n = 1..8.
#[test]
fn embedded_generic_table_matches_transcription() {
    let path = format!(
        "{}/tests/data/table_generic.txt",
        env!("CARGO_MANIFEST_DIR")
    );
    let txt = std::fs::read_to_string(path).unwrap();
    let mut rows = 0;
    for line in txt.lines() {
        let (avoid, counts) = line.split_once(' ').unwrap();
        let avoid: Vec<usize> = avoid
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        let counts: Vec<u64> = counts.split(',').map(|x| x.parse().unwrap()).collect();
        let row = GENERIC_BASE
            .iter()
            .find(|r| r.avoid == avoid.as_slice())
            .unwrap_or_else(|| panic!("no embedded row for {avoid:?}"));
        assert_eq!(&row.counts[..counts.len()], counts.as_slice(), "{avoid:?}");
        rows += 1;
    }
    assert_eq!(
        rows,
        GENERIC_BASE.len() - 1,
        "every row but the unrestricted one"
    );
}
