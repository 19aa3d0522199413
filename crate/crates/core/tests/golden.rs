//! Bundled scripts reproduce their recorded transcripts byte for byte.
//! Set `SOLVKIT_BLESS=1` to rewrite the recordings.

mod common;

use common::{golden_path, scripts, transcript};

#[test]
fn transcripts_match_recordings() {
    let bless = std::env::var_os("SOLVKIT_BLESS").is_some();
    let scripts = scripts();
    assert!(!scripts.is_empty());
    for script in scripts {
        let got = transcript(&script);
        let path = golden_path(&script);
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing recording {}", path.display()));
        assert_eq!(got, want, "transcript of {} changed", script.display());
    }
}

#[test]
fn transcripts_are_lf_only() {
    for script in scripts() {
        let t = transcript(&script);
        assert!(!t.contains('\r'));
        assert!(t.is_empty() || t.ends_with('\n'));
    }
}
