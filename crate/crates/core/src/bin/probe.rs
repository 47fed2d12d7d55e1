use superalg::catalog::{self, FamilyArgs};
use superalg::identity::{self, IdentitySpec};

fn main() {
    for p in [3u64, 5] {
        let jp3 = catalog::build_family("jordan-jp3", &FamilyArgs::default().with_char(p)).unwrap();
        for id in ["supercomm", "super-jordan"] {
            let spec = IdentitySpec::builtin(id).unwrap();
            let rep = identity::check_identity(&jp3, &spec).unwrap();
            match &rep.witness {
                None => println!("mod {p} {id}: holds"),
                Some(w) => println!("mod {p} {id}: FAILS at {:?}, residual {}", w.names, w.residual),
            }
        }
    }
}
