"""The command line front end and run time configuration.
"""

from pathlib import Path
import json
import pytest
from spherical_classes import catalog, cli, matgrp
from spherical_classes.errors import BruhatError
from spherical_classes.config import Config


def test_classify_json(capsys):
    assert cli.main(["classify", "--family", "G", "--rank", "2",
                     "--format", "json", "--no-certify"]) == cli.EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r['dim'] for r in rows] == [8, 6, 6, 8]
    assert 'certificate' not in rows[0]


def test_classify_certified_tsv(capsys):
    assert cli.main(["classify", "--family", "G", "--rank", "2",
                     "--format", "tsv"]) == cli.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t")[-1] == "certificate"
    assert len(lines) == 5
    assert all(l.split("\t")[-1] not in ("", "FAILED") for l in lines[1:])


def test_classify_sl2(capsys):
    cli.main(["classify", "--family", "A", "--rank", "1", "--no-certify"])
    assert "all classes spherical" in capsys.readouterr().out


def test_classify_to_file(tmp_path):
    out = tmp_path / "e6.json"
    assert cli.main(["classify", "--family", "E", "--rank", "6",
                     "--format", "json", "--no-certify",
                     "--output", str(out)]) == cli.EXIT_OK
    rows = json.loads(out.read_text())
    assert len(rows) == 5


def test_invalid_type(capsys):
    assert cli.main(["classify", "--family", "D", "--rank", "3"]) == \
        cli.EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["verify"])
    assert excinfo.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["verify", "--family", "C", "--rank", "2",
                  "--budget", "-3"])
    assert excinfo.value.code == cli.EXIT_USAGE


def test_verify_needs_classical(capsys):
    assert cli.main(["verify", "--family", "E", "--rank", "6"]) == \
        cli.EXIT_USAGE


def test_verify_bad_prime(capsys):
    assert cli.main(["verify", "--family", "C", "--rank", "2",
                     "--prime", "4"]) == cli.EXIT_USAGE


def test_verify_sl2(capsys):
    assert cli.main(["verify", "--family", "A", "--rank", "1",
                     "--prime", "5"]) == cli.EXIT_OK
    records = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert len(records) == 2
    assert all(r['ok'] and r['mode'] == 'exhaustive' for r in records)


def test_verify_skips_small_field(capsys):
    assert cli.main(["verify", "--family", "A", "--rank", "1",
                     "--prime", "3"]) == cli.EXIT_OK
    records = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert 'skipped' in records[0]


def test_candidates(capsys):
    assert cli.main(["candidates", "--family", "E", "--rank", "6",
                     "--format", "json"]) == cli.EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 6
    assert {r['dim'] for r in rows} == {32, 40}


def test_bruhat_identity(capsys):
    ident = json.dumps([[int(i == j) for j in range(4)] for i in range(4)])
    assert cli.main(["bruhat", "--family", "C", "--rank", "2",
                     "--matrix", ident]) == cli.EXIT_OK
    assert capsys.readouterr().out == "\n"


def test_bruhat_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("[[1, 0], [1, 1]]"))
    assert cli.main(["bruhat", "--family", "A", "--rank", "1",
                     "--prime", "5"]) == cli.EXIT_OK
    assert capsys.readouterr().out == "1\n"


def test_bruhat_not_in_group(capsys):
    m = json.dumps([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert cli.main(["bruhat", "--family", "C", "--rank", "2",
                     "--matrix", m]) == cli.EXIT_USAGE
    assert "g^T J g = J" in capsys.readouterr().err


def test_bruhat_garbage(capsys):
    assert cli.main(["bruhat", "--family", "C", "--rank", "2",
                     "--matrix", "not json"]) == cli.EXIT_USAGE


def test_dims(capsys):
    assert cli.main(["dims", "--family", "C", "--rank", "2",
                     "--format", "json"]) == cli.EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert all(r['dim'] == r['ad_rank'] == r['formula'] for r in rows)
    assert [r['spherical'] for r in rows] == [True, True, False, False]
    assert {r['dim'] for r in rows if not r['spherical']} == {0, 8}


def test_run_config():
    args = cli.build_parser().parse_args(
        ["verify", "--family", "B", "--rank", "2"])
    run = cli.RunConfig.from_args(args, Config(environ={}, DefaultSeed=4))
    assert run.seed == 4
    assert run.prime == 5
    assert run.budget is None
    assert run.options == {}
    run = cli.RunConfig(command='bruhat', family='A', rank=2, prime=9)
    with pytest.raises(cli.UsageError):
        run.validate()


def test_config_environment():
    cfg = Config(environ={'SPHERICAL_WORKERS': "3",
                          'SPHERICAL_BUDGET': "oops"})
    assert cfg.Workers == 3
    assert cfg.SampleBudget == Config.SampleBudget
    cfg = Config(environ={'SPHERICAL_SEED': "5"}, DefaultSeed=9,
                 Workers=None)
    assert cfg.DefaultSeed == 9
    assert cfg.Workers == 1
    with pytest.raises(TypeError):
        Config(environ={}, Colour=1)


golden_dir = Path(__file__).parent / "golden"


@pytest.mark.parametrize("family,rank", [
    ('A', 1), ('A', 2), ('A', 3), ('A', 4), ('A', 5), ('B', 2), ('B', 3),
    ('B', 4), ('C', 2), ('C', 3), ('C', 4), ('D', 4), ('D', 5), ('E', 6),
    ('E', 7), ('E', 8), ('F', 4), ('G', 2),
])
def test_classify_golden(capsys, family, rank):
    assert cli.main(["classify", "--family", family, "--rank", str(rank),
                     "--format", "json", "--no-certify"]) == cli.EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    golden = json.loads((golden_dir / ("classify_%s%d.json" % (family, rank)))
                        .read_text())
    keys = ('type', 'kind', 'name', 'label')
    assert [{k: r.get(k, "") for k in keys} for r in rows] == \
        [{k: g[k] for k in keys} for g in golden]
    assert [r.get('dim') for r in rows] == [g['dim'] for g in golden]


def test_verify_reports_notes(capsys, monkeypatch):
    classes = [d for d in catalog.spherical_classes('B', 2)
               if d.partition == (3, 1, 1)]
    monkeypatch.setattr(catalog, "spherical_classes", lambda f, r: classes)
    monkeypatch.setattr(catalog, "nonspherical_witness_specs",
                        lambda f, r: [])
    assert cli.main(["verify", "--family", "B", "--rank", "2",
                     "--prime", "5"]) == cli.EXIT_OK
    records = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert len(records) == 1
    assert records[0]['ok']
    assert records[0]['mode'] == 'exhaustive'
    assert records[0]['notes'] == [catalog.M0_NOTE]


def test_verify_inconsistency(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise BruhatError("permutation (1, 0) is not signed")

    monkeypatch.setattr(matgrp, "verify_involution_criterion", broken)
    assert cli.main(["verify", "--family", "A", "--rank", "1",
                     "--prime", "5"]) == cli.EXIT_INCONSISTENT
    records = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert all(not r['ok'] and "not signed" in r['error'] for r in records)


def test_verify_witness_records(capsys, monkeypatch):
    monkeypatch.setattr(catalog, "spherical_classes", lambda f, r: [])
    assert cli.main(["verify", "--family", "C", "--rank", "2",
                     "--prime", "5", "--budget", "100"]) == cli.EXIT_OK
    records = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert [r['witness'] for r in records] == ["(4,1^0)", "c_c*u"]
    assert all(r['found'] for r in records)
