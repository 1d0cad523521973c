use super::{content_lines, split_key};
use crate::error::{Error, Result};
use crate::lta::Lexicon;

/// Parses `syn:`, `stop:` and `verb:` lines of comma-separated tokens.
pub fn parse_lexicon(input: &str) -> Result<Lexicon> {
    let mut lexicon = Lexicon::new();
    for (line, text) in content_lines(input) {
        let (key, value) = split_key(text).ok_or_else(|| {
            Error::parse(
                line,
                "expected `syn: t1, t2, ...`, `stop: ...` or `verb: ...`",
            )
        })?;
        let tokens: Vec<&str> = value.split(',').map(str::trim).collect();
        match key {
            "syn" => lexicon.add_synonym_group(&tokens),
            "stop" => tokens.iter().try_for_each(|t| lexicon.add_stopword(t)),
            "verb" => tokens.iter().try_for_each(|t| lexicon.add_verb(t)),
            other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
        }
        .map_err(|e| e.at_line(line))?;
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::bundled;

    #[test]
    fn single_group() {
        let lex = parse_lexicon("syn: manage, managing, determining\n").unwrap();
        assert_eq!(
            lex.synonym_groups(),
            [vec!["manage", "managing", "determining"]]
        );
        assert_eq!(lex.canonical("determining"), "manage");
    }

    #[test]
    fn empty_file_keeps_builtins() {
        let lex = parse_lexicon("").unwrap();
        assert!(lex.synonym_groups().is_empty());
        assert!(lex.is_stopword("the"));
        assert!(lex.is_verb("is"));
    }

    #[test]
    fn overlapping_group_fails_on_its_line() {
        let err = parse_lexicon("syn: a1, b1\nsyn: b1, c1\n").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("b1"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_key_and_bad_tokens() {
        assert!(matches!(
            parse_lexicon("# c\nalias: x, y\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_lexicon("stop: x,,y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_lexicon("just words\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn bundled_lexicon_loads() {
        let lex = parse_lexicon(bundled::TUNED_LEXICON).unwrap();
        assert!(lex.is_stopword("is"));
        assert!(lex.is_verb("grooming"));
        assert_eq!(lex.canonical("pbis"), "backlog-item");
    }
}
