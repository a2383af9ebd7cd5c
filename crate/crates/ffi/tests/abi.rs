use std::ffi::{c_char, c_int, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use amalgam_order_ffi::*;

const TREFOIL: &str = "group Zx = Z(x)\ngroup Zy = Z(y)\nsubgroup A = cyclic(Zx: x^2, Zy: y^3)\ngroup T = amalgam(Zx, Zy, A, variant=1)\n";

fn last_error() -> String {
    let p = ao_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

struct Fixture {
    group: *mut AoGroup,
}

impl Fixture {
    fn trefoil() -> Self {
        let src = CString::new(TREFOIL).unwrap();
        let mut tower = ptr::null_mut();
        let mut group = ptr::null_mut();
        unsafe {
            assert_eq!(ao_tower_parse(src.as_ptr(), &mut tower), AoStatus::Ok);
            assert_eq!(ao_tower_group(tower, ptr::null(), &mut group), AoStatus::Ok);
            ao_tower_free(tower);
        }
        Fixture { group }
    }

    fn parse(&self, word: &str) -> *mut AoElement {
        let w = CString::new(word).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { ao_element_parse(self.group, w.as_ptr(), &mut out) }, AoStatus::Ok);
        out
    }

    fn render(&self, x: *const AoElement) -> String {
        let mut s: *mut c_char = ptr::null_mut();
        unsafe {
            assert_eq!(ao_element_to_string(x, &mut s), AoStatus::Ok);
            let out = CStr::from_ptr(s).to_str().unwrap().to_string();
            ao_string_free(s);
            out
        }
    }
}

impl Drop for Fixture {
    fn drop(&mut self) {
        unsafe { ao_group_free(self.group) }
    }
}

#[test]
fn arithmetic_and_order() {
    let f = Fixture::trefoil();
    let (x, y) = (f.parse("x"), f.parse("y"));
    let mut xy = ptr::null_mut();
    let mut inv = ptr::null_mut();
    let mut cmp: c_int = 9;
    unsafe {
        assert_eq!(ao_mul(x, y, &mut xy), AoStatus::Ok);
        assert_eq!(ao_inv(xy, &mut inv), AoStatus::Ok);
        assert_eq!(f.render(inv), "y^-4*x");
        assert_eq!(ao_compare(x, y, &mut cmp), AoStatus::Ok);
        assert_eq!(cmp, 1);
        assert_eq!(ao_sign(inv, &mut cmp), AoStatus::Ok);
        assert_eq!(cmp, -1);
        for p in [x, y, xy, inv] {
            ao_element_free(p);
        }
    }
    assert!(ao_last_error().is_null());
}

#[test]
fn amalgam_queries() {
    let f = Fixture::trefoil();
    let mut m = ptr::null_mut();
    let mut floor = ptr::null_mut();
    let mut level = 0i64;
    unsafe {
        assert_eq!(ao_min_positive(f.group, &mut m), AoStatus::Ok);
        assert_eq!(f.render(m), "y^-2*x");
        let y4 = f.parse("y^4");
        assert_eq!(ao_floor(y4, &mut floor), AoStatus::Ok);
        assert_eq!(f.render(floor), "x^2");
        let xy = f.parse("x*y");
        assert_eq!(ao_level_twice(xy, &mut level), AoStatus::Ok);
        assert_eq!(level, 2);
        for p in [m, floor, y4, xy] {
            ao_element_free(p);
        }
    }
}

#[test]
fn errors_are_reported() {
    let f = Fixture::trefoil();
    let bad = CString::new("x*z").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(ao_element_parse(f.group, bad.as_ptr(), &mut out), AoStatus::ParseError);
        assert!(out.is_null());
        assert!(last_error().contains("z"), "{}", last_error());
        assert_eq!(ao_element_parse(ptr::null(), bad.as_ptr(), &mut out), AoStatus::NullPointer);
        assert_eq!(ao_element_parse(f.group, ptr::null(), &mut out), AoStatus::NullPointer);
        let invalid = [0xffu8 as c_char, 0];
        assert_eq!(ao_element_parse(f.group, invalid.as_ptr(), &mut out), AoStatus::InvalidUtf8);

        let src = CString::new("group T = amalgam(Zx, Zy, A, variant=1)\n").unwrap();
        let mut tower = ptr::null_mut();
        assert_eq!(ao_tower_parse(src.as_ptr(), &mut tower), AoStatus::ParseError);
        assert!(tower.is_null());
        assert!(last_error().starts_with("1:"), "{}", last_error());

        let name = CString::new("Nope").unwrap();
        let src = CString::new(TREFOIL).unwrap();
        assert_eq!(ao_tower_parse(src.as_ptr(), &mut tower), AoStatus::Ok);
        let mut g = ptr::null_mut();
        assert_eq!(ao_tower_group(tower, name.as_ptr(), &mut g), AoStatus::NotFound);
        ao_tower_free(tower);
    }
}

#[test]
fn cyclic_groups_reject_amalgam_queries() {
    let src = CString::new(TREFOIL).unwrap();
    let name = CString::new("Zx").unwrap();
    let word = CString::new("x").unwrap();
    let (mut tower, mut g, mut x, mut out) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    let mut level = 0;
    unsafe {
        assert_eq!(ao_tower_parse(src.as_ptr(), &mut tower), AoStatus::Ok);
        assert_eq!(ao_tower_group(tower, name.as_ptr(), &mut g), AoStatus::Ok);
        assert_eq!(ao_element_parse(g, word.as_ptr(), &mut x), AoStatus::Ok);
        assert_eq!(ao_floor(x, &mut out), AoStatus::DomainError);
        assert_eq!(ao_level_twice(x, &mut level), AoStatus::DomainError);

        let f = Fixture::trefoil();
        let y = f.parse("y");
        let mut cmp = 0;
        assert_eq!(ao_compare(x, y, &mut cmp), AoStatus::DomainError);
        assert!(last_error().contains("different groups"));
        ao_element_free(y);
        ao_element_free(x);
        ao_group_free(g);
        ao_tower_free(tower);
    }
}

#[test]
fn null_handles_are_ignored_by_free() {
    unsafe {
        ao_tower_free(ptr::null_mut());
        ao_group_free(ptr::null_mut());
        ao_element_free(ptr::null_mut());
        ao_string_free(ptr::null_mut());
    }
}

/// Directory holding the static library, next to the test binary.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = lib_dir().join("libamalgam_order_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let bin = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "cc failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
