"""Command line front end: ``monoglue <command> [options]``.

Every command reads JSON documents (``--in FILE``, repeatable, or standard
input) and writes one JSON document.  Commands taking two objects (``hom``,
``iso``) read two ``--in`` files or a JSON array of two documents on stdin.

Exit codes: 0 success, 1 invalid input or failed self-test, 2 unsupported
computation (factor search beyond degree 8, hom space above the bound).
"""

from __future__ import annotations

import argparse
import sys

from .errors import InputError, Malformed, MonoglueError
from .fourdual import dual_morphism, fourier, fourier_morphism, verdier_dual
from .gluecat import (
    DEFAULT_MAX_HOM_DIM,
    GlueObject,
    hom_space,
    is_isomorphic,
    is_simple,
    jordan_holder_class,
    monodromy,
)
from .hodge import (
    HodgeGlueObject,
    MixedHodgeStructure,
    hodge_dual,
    hodge_fourier,
    hodge_is_isomorphic,
    rat_forget,
    tate_twist,
)
from .selftest import selftest_report
from .serialize import KINDS, Document, decode, dumps, encode, encode_matrix, load_json
from .sheafdict import (
    Extension,
    costalk_at_zero,
    extend,
    forget_supports,
    global_cohomology,
    stalk_at_zero,
)


def _expect(doc: Document, *kinds: str):
    if doc.kind not in kinds:
        raise InputError(f"expected a document of kind {' or '.join(kinds)}, got {doc.kind}")
    return doc.value


def _one(docs, *kinds):
    if len(docs) != 1:
        raise InputError(f"expected one input document, got {len(docs)}")
    return _expect(docs[0], *kinds)


def _two(docs, *kinds):
    if len(docs) != 2:
        raise InputError(f"expected two input documents, got {len(docs)}")
    a, b = (_expect(d, *kinds) for d in docs)
    if type(a) is not type(b):
        raise InputError("both documents must have the same kind")
    return a, b


def cmd_validate(docs, args):
    return encode(_one(docs, *KINDS))


def cmd_fourier(docs, args):
    v = _one(docs, "glue_object", "glue_morphism")
    return encode(fourier(v) if isinstance(v, GlueObject) else fourier_morphism(v))


def cmd_dual(docs, args):
    v = _one(docs, "glue_object", "glue_morphism")
    return encode(verdier_dual(v) if isinstance(v, GlueObject) else dual_morphism(v))


def cmd_monodromy(docs, args):
    T_psi, T_phi = monodromy(_one(docs, "glue_object"))
    return {"kind": "monodromy", "T_psi": encode_matrix(T_psi), "T_phi": encode_matrix(T_phi)}


def cmd_jh(docs, args):
    return jordan_holder_class(_one(docs, "glue_object")).as_dict()


def cmd_simple(docs, args):
    return {"simple": is_simple(_one(docs, "glue_object"))}


def cmd_stalk(docs, args):
    return stalk_at_zero(_one(docs, "glue_object")).as_dict()


def cmd_costalk(docs, args):
    return costalk_at_zero(_one(docs, "glue_object")).as_dict()


def cmd_cohomology(docs, args):
    return global_cohomology(_one(docs, "glue_object")).as_dict()


def cmd_extend(docs, args):
    L = _one(docs, "local_system")
    try:
        kind = Extension(args.kind or "")
    except ValueError:
        raise InputError("extend needs --kind shriek, star or intermediate") from None
    return encode(extend(L, kind))


def cmd_forget_supports(docs, args):
    return encode(forget_supports(_one(docs, "local_system")))


def cmd_hom(docs, args):
    X, Y = _two(docs, "glue_object")
    basis = hom_space(X, Y)
    return {"kind": "hom_space", "dimension": len(basis), "basis": [encode(m) for m in basis]}


def cmd_iso(docs, args):
    X, Y = _two(docs, "glue_object", "hodge_glue_object")
    if isinstance(X, HodgeGlueObject):
        ok, hit = hodge_is_isomorphic(X, Y)
        witness = None if hit is None else {"f": encode_matrix(hit[0]), "g": encode_matrix(hit[1])}
    else:
        ok, m = is_isomorphic(X, Y, max_hom_dim=args.max_hom_dim)
        witness = None if m is None else encode(m)
    return {"isomorphic": ok, "witness": witness}


def cmd_hodge_validate(docs, args):
    return encode(_one(docs, "hodge_glue_object", "mhs"))


def cmd_hodge_fourier(docs, args):
    return encode(hodge_fourier(_one(docs, "hodge_glue_object")))


def cmd_hodge_dual(docs, args):
    return encode(hodge_dual(_one(docs, "hodge_glue_object")))


def cmd_twist(docs, args):
    v = _one(docs, "mhs", "hodge_glue_object")
    n = args.twist
    return encode(tate_twist(v, n) if isinstance(v, MixedHodgeStructure) else v.twist(n))


def cmd_rat(docs, args):
    return encode(rat_forget(_one(docs, "hodge_glue_object")))


COMMANDS = {
    "validate": cmd_validate,
    "fourier": cmd_fourier,
    "dual": cmd_dual,
    "monodromy": cmd_monodromy,
    "jh": cmd_jh,
    "simple": cmd_simple,
    "stalk": cmd_stalk,
    "costalk": cmd_costalk,
    "cohomology": cmd_cohomology,
    "extend": cmd_extend,
    "forget-supports": cmd_forget_supports,
    "hom": cmd_hom,
    "iso": cmd_iso,
    "hodge-validate": cmd_hodge_validate,
    "hodge-fourier": cmd_hodge_fourier,
    "hodge-dual": cmd_hodge_dual,
    "twist": cmd_twist,
    "rat": cmd_rat,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monoglue", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS) + ["selftest"])
    p.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE",
                   help="input document (repeat for two-object commands); default stdin")
    p.add_argument("--out", default="-", metavar="FILE", help="output file; default stdout")
    p.add_argument("--kind", help="extension kind for 'extend'; expected document kind otherwise")
    p.add_argument("--seed", type=int, default=0, help="selftest seed")
    p.add_argument("--dims", type=int, default=4, help="selftest dimension cap")
    p.add_argument("--twist", type=int, default=1, help="Tate twist for 'twist'")
    p.add_argument("--max-hom-dim", type=int, default=DEFAULT_MAX_HOM_DIM,
                   help="largest hom space searched by 'iso'")
    return p


def read_documents(inputs: list[str], stdin) -> list[Document]:
    raw = []
    if inputs:
        for name in inputs:
            try:
                with open(name, "rb") as fh:
                    raw.append((name, load_json(fh.read())))
            except OSError as exc:
                raise InputError(f"{name}: {exc.strerror}") from None
            except Malformed as exc:
                raise Malformed(f"{name}: {exc}") from None
    else:
        data = load_json(stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read())
        if isinstance(data, list):
            raw.extend((f"$[{i}]", d) for i, d in enumerate(data))
        else:
            raw.append(("$", data))
    return [decode(obj, path) for path, obj in raw]


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            result = selftest_report(args.seed, args.dims)
            code = 0 if result["failures"] == 0 else 1
        else:
            docs = read_documents(args.inputs, stdin)
            if args.kind and args.command != "extend":
                for d in docs:
                    _expect(d, args.kind)
            result = COMMANDS[args.command](docs, args)
            code = 0
    except MonoglueError as exc:
        print(f"monoglue: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    text = dumps(result)
    if args.out == "-":
        stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
