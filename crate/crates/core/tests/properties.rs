use ibpsc::codec::transcript::{encode_transcript, FieldTag};
use ibpsc::codec::{decode, encode};
use ibpsc::{keygen, seeded_rng, setup, signcrypt, unsigncrypt, CurveProfile, Signcryption, TPProof, UserPrivateKey};
use proptest::prelude::*;
use std::sync::OnceLock;

fn world() -> &'static (ibpsc::SystemParams, ibpsc::MasterSecret) {
    static W: OnceLock<(ibpsc::SystemParams, ibpsc::MasterSecret)> = OnceLock::new();
    W.get_or_init(|| setup(CurveProfile::Bls12_381, &mut seeded_rng(b"properties")))
}

fn tag() -> impl Strategy<Value = FieldTag> {
    prop_oneof![
        Just(FieldTag::Message),
        Just(FieldTag::Identity),
        Just(FieldTag::Ciphertext),
        Just(FieldTag::G1),
    ]
}

fn fields() -> impl Strategy<Value = Vec<(FieldTag, Vec<u8>)>> {
    prop::collection::vec((tag(), prop::collection::vec(any::<u8>(), 0..6)), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transcript_encoding_is_injective(a in fields(), b in fields()) {
        let ea = encode_transcript(a.iter().map(|(t, p)| (*t, p.as_slice())));
        let eb = encode_transcript(b.iter().map(|(t, p)| (*t, p.as_slice())));
        prop_assert_eq!(ea == eb, a == b);
    }

    #[test]
    fn sigma_and_proof_round_trip(m in prop::collection::vec(any::<u8>(), 0..300), seed in any::<u64>()) {
        let (params, master) = world();
        let a = keygen(params, master, b"prop-a").unwrap();
        let b = keygen(params, master, b"prop-b").unwrap();
        let sigma = signcrypt(params, &a, b"prop-a", b"prop-b", &m, &mut seeded_rng(&seed.to_be_bytes())).unwrap();
        let bytes = encode(&sigma);
        let back: Signcryption = decode(&bytes).unwrap();
        prop_assert_eq!(&back, &sigma);
        prop_assert_eq!(encode(&back), bytes);
        let (out, proof) = unsigncrypt(params, &b, b"prop-a", b"prop-b", &sigma).unwrap();
        prop_assert_eq!(&out, &m);
        let back: TPProof = decode(&encode(&proof)).unwrap();
        prop_assert_eq!(back, proof);
    }

    #[test]
    fn key_round_trip(id in "[a-z0-9@.]{1,40}") {
        let (params, master) = world();
        let key = keygen(params, master, id.as_bytes()).unwrap();
        let back: UserPrivateKey = decode(&encode(&key)).unwrap();
        prop_assert_eq!(back, key);
    }
}
