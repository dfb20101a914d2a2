use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use blockspec_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    bs_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bs_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn build(expr: &str) -> *mut BsDesign {
    let mut d = ptr::null_mut();
    assert_eq!(
        bs_design_construct(cstr(expr).as_ptr(), &mut d),
        BsStatus::Ok,
        "{}",
        last_error()
    );
    d
}

#[test]
fn design_lifecycle_and_params() {
    unsafe {
        let fano = build("fano");
        let mut p = BsParams::default();
        assert_eq!(bs_design_params(fano, &mut p), BsStatus::Ok);
        assert_eq!(
            p,
            BsParams {
                v: 7,
                b: 7,
                r: 3,
                k: 3,
                lambda: 1
            }
        );

        let mut json = ptr::null_mut();
        assert_eq!(bs_design_to_json(fano, &mut json), BsStatus::Ok);
        let text = take(json);
        let mut again = ptr::null_mut();
        assert_eq!(
            bs_design_from_json(cstr(&text).as_ptr(), &mut again),
            BsStatus::Ok
        );
        let mut q = BsParams::default();
        bs_design_params(again, &mut q);
        assert_eq!(p, q);
        bs_design_free(again);
        bs_design_free(fano);
        bs_design_free(ptr::null_mut());
        bs_string_free(ptr::null_mut());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut d = ptr::null_mut();
        let bad = cstr(r#"{"v":4,"blocks":[[1,2],[1,4],[2,4],[3,4]]}"#);
        assert_eq!(
            bs_design_from_json(bad.as_ptr(), &mut d),
            BsStatus::InvalidDesign
        );
        assert!(last_error().contains("replication"), "{}", last_error());
        assert!(d.is_null());

        assert_eq!(
            bs_design_from_json(cstr("{").as_ptr(), &mut d),
            BsStatus::ParseError
        );
        assert_eq!(
            bs_design_from_json(ptr::null(), &mut d),
            BsStatus::NullPointer
        );
        assert_eq!(
            bs_design_construct(cstr("steiner").as_ptr(), &mut d),
            BsStatus::InvalidArgument
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            bs_design_construct(invalid.as_ptr().cast(), &mut d),
            BsStatus::InvalidUtf8
        );

        let fano = build("fano");
        let other = build("complete(6,2)");
        let mut s = ptr::null_mut();
        let mut overall = false;
        assert_eq!(
            bs_verify_spectrum(fano, other, &mut s, &mut overall),
            BsStatus::MismatchedPointSets
        );
        assert!(s.is_null());
        assert_eq!(
            bs_verify_spectrum(fano, fano, &mut s, ptr::null_mut()),
            BsStatus::NullPointer
        );
        assert_eq!(
            bs_paper_examples(9, &mut s, &mut overall),
            BsStatus::InvalidArgument
        );
        assert_eq!(
            bs_graph_dot(
                BsGraphKind::SIntersection,
                fano,
                ptr::null(),
                ptr::null(),
                0,
                &mut s
            ),
            BsStatus::InvalidArgument
        );
        assert_eq!(
            bs_design_params(fano, &mut BsParams::default()),
            BsStatus::Ok
        );
        assert_eq!(last_error(), "");
        bs_design_free(fano);
        bs_design_free(other);
    }
}

#[test]
fn matrices_and_spectrum() {
    unsafe {
        let t = build("trivial(3)");
        let c = build("complete(3,2)");
        let mut s = ptr::null_mut();
        assert_eq!(
            bs_mutual_matrix(t, c, BsProduct::None, BsMatrixFormat::Csv, &mut s),
            BsStatus::Ok
        );
        assert_eq!(take(s), "1,1,0\n1,0,1\n0,1,1\n");
        assert_eq!(
            bs_mutual_matrix(t, c, BsProduct::Mtm, BsMatrixFormat::Json, &mut s),
            BsStatus::Ok
        );
        assert_eq!(
            take(s).replace(char::is_whitespace, ""),
            "[[2,1,1],[1,2,1],[1,1,2]]"
        );

        let fano = build("fano");
        let ex = build("ex1_d2");
        let mut overall = false;
        assert_eq!(
            bs_verify_spectrum(fano, ex, &mut s, &mut overall),
            BsStatus::Ok
        );
        assert!(overall);
        let report = take(s);
        assert!(report.contains("\"mu1\": 324"), "{report}");
        assert!(report.contains("\"mu2\": 16"));

        assert_eq!(bs_self_spectrum(fano, &mut s, &mut overall), BsStatus::Ok);
        assert!(overall);
        assert!(take(s).contains("\"rk\": 9"));
        for d in [t, c, fano, ex] {
            bs_design_free(d);
        }
    }
}

#[test]
fn graphs_and_examples() {
    unsafe {
        let t = build("trivial(7)");
        let fano = build("fano");
        let mut s = ptr::null_mut();
        assert_eq!(
            bs_graph_dot(BsGraphKind::Mutual, t, fano, ptr::null(), 0, &mut s),
            BsStatus::Ok
        );
        assert_eq!(take(s).matches("--").count(), 21);
        assert_eq!(
            bs_graph_dot(BsGraphKind::Mutual, t, ptr::null(), ptr::null(), 0, &mut s),
            BsStatus::NullPointer
        );
        let sizes = [1usize];
        assert_eq!(
            bs_graph_dot(
                BsGraphKind::SIntersection,
                fano,
                ptr::null(),
                sizes.as_ptr(),
                1,
                &mut s
            ),
            BsStatus::Ok
        );
        assert_eq!(take(s).matches("--").count(), 21);

        let mut ok = false;
        assert_eq!(bs_paper_examples(0, &mut s, &mut ok), BsStatus::Ok);
        assert!(ok);
        assert!(!take(s).contains("FAIL"));
        bs_design_free(t);
        bs_design_free(fano);
    }
}

const HEADER: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/include/blockspec.h");

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(HEADER).unwrap();
    for decl in [
        "typedef struct BsDesign BsDesign;",
        "BS_STATUS_OK = 0",
        "BS_STATUS_MISMATCHED_POINT_SETS",
        "const char *bs_last_error(void);",
        "void bs_string_free(char *s);",
        "enum BsStatus bs_design_from_json(const char *json, struct BsDesign **out);",
        "enum BsStatus bs_design_construct(const char *expr, struct BsDesign **out);",
        "void bs_design_free(struct BsDesign *d);",
        "enum BsStatus bs_design_params(const struct BsDesign *d, struct BsParams *out);",
        "enum BsStatus bs_mutual_matrix(",
        "enum BsStatus bs_verify_spectrum(",
        "enum BsStatus bs_self_spectrum(",
        "enum BsStatus bs_graph_dot(",
        "enum BsStatus bs_paper_examples(uint32_t which, char **out_text, bool *ok);",
    ] {
        assert!(h.contains(decl), "missing {decl}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(cc.status.success());
    let dir = tempfile::TempDir::new().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"blockspec.h\"\n\
         int main(void) {\n\
           BsDesign *d = 0;\n\
           BsParams p;\n\
           if (bs_design_construct(\"fano\", &d) != BS_STATUS_OK) return 1;\n\
           bs_design_params(d, &p);\n\
           bs_design_free(d);\n\
           return p.v == 7 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let include = Path::new(HEADER).parent().unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
