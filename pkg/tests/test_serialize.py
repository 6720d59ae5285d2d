import json
from fractions import Fraction

import pytest

from bihomcheck.discovery import (
    RBTarget,
    SearchSpec,
    catalogue,
    catalogue_entry,
)
from bihomcheck.exactlin import LinearMap, Tensor2
from bihomcheck.serialize import (
    Document,
    DocumentError,
    catalogue_document,
    doc_from_linear_map,
    doc_from_tensor2,
    format_scalar,
    parse,
    parse_scalar,
    serialize,
    to_bihom_algebra,
    to_linear_map,
    to_tensor2,
)
from bihomcheck.structures import BraceRB

F = Fraction


class TestScalars:
    def test_integer_forms(self):
        assert parse_scalar("0", "/x") == 0
        assert parse_scalar("-7", "/x") == -7
        assert parse_scalar("3/2", "/x") == F(3, 2)
        assert parse_scalar("-3/2", "/x") == F(-3, 2)

    @pytest.mark.parametrize("bad", ["2/4", "-0", "0.5", "1/0", "1/-2", "01",
                                     "+1", "", "1 /2", "a"])
    def test_rejects_noncanonical(self, bad):
        with pytest.raises(DocumentError):
            parse_scalar(bad, "/x")

    def test_numbers_rejected(self):
        with pytest.raises(DocumentError):
            parse_scalar(3, "/x")

    def test_format_round_trip(self):
        for value in (F(0), F(-7), F(3, 2), F(-22, 7)):
            assert parse_scalar(format_scalar(value), "/x") == value

    def test_denominator_one_canonicalizes(self):
        assert parse_scalar("3/1", "/x") == 3
        assert format_scalar(F(3, 1)) == "3"


class TestRoundTrip:
    def test_catalogue_documents(self):
        for entry in catalogue():
            doc = catalogue_document(entry)
            text = serialize(doc)
            again = parse(text)
            assert again == doc
            assert serialize(again) == text

    def test_compact_round_trip(self):
        doc = catalogue_document(catalogue_entry("m2-qt"))
        assert parse(serialize(doc, compact=True)) == doc

    def test_bytes_input(self):
        doc = doc_from_tensor2(Tensor2.from_pairs(2, {(0, 1): F(1, 3)}))
        assert parse(serialize(doc).encode()) == doc

    def test_search_spec_round_trip(self, n2, id2, sgn):
        spec = SearchSpec(RBTarget(BraceRB(id2, sgn), commute_with=(sgn,)),
                          coefficients=(F(-1), F(0), F(1), F(1, 2)),
                          support=((0, 0), (1, 1)), budget=5000)
        ambient = catalogue_document(catalogue_entry("n2"))
        doc = Document("search-spec", {"spec": spec, "ambient": ambient})
        again = parse(serialize(doc))
        assert again.payload["spec"] == spec
        assert again.payload["ambient"] == ambient


class TestValidation:
    def _doc_obj(self, entry_id="n2"):
        return json.loads(serialize(catalogue_document(catalogue_entry(entry_id))))

    def test_lowest_terms_enforced_with_path(self):
        obj = self._doc_obj()
        obj["payload"]["mu"][0][0][1] = "2/4"
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert exc.value.path == "/payload/mu/0/0/1"

    def test_wrong_inner_length_names_path(self):
        obj = self._doc_obj()
        obj["payload"]["mu"][1][0] = ["0"]
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert exc.value.path == "/payload/mu/1/0"

    def test_unknown_field_rejected(self):
        obj = self._doc_obj()
        obj["payload"]["weight"] = "1"
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert exc.value.path == "/payload/weight"

    def test_missing_convention(self):
        obj = json.loads(serialize(doc_from_linear_map(LinearMap.identity(2))))
        del obj["payload"]["convention"]
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert "convention" in exc.value.path

    def test_wrong_convention_value(self):
        obj = json.loads(serialize(doc_from_linear_map(LinearMap.identity(2))))
        obj["payload"]["convention"] = "rows-are-images"
        with pytest.raises(DocumentError):
            parse(json.dumps(obj))

    def test_bad_schema_version(self):
        obj = self._doc_obj()
        obj["schema_version"] = "2"
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert exc.value.path == "/schema_version"

    def test_unknown_kind(self):
        obj = self._doc_obj()
        obj["kind"] = "widget"
        with pytest.raises(DocumentError):
            parse(json.dumps(obj))

    def test_malformed_json(self):
        with pytest.raises(DocumentError) as exc:
            parse("{not json")
        assert "malformed JSON" in str(exc.value)

    def test_non_utf8(self):
        with pytest.raises(DocumentError):
            parse(b"\xff\xfe{}")

    def test_dim_mismatch_in_matrix(self):
        obj = json.loads(serialize(catalogue_document(catalogue_entry("m2-qt"))))
        obj["payload"]["alpha"]["entries"] = [["1", "0"], ["0", "1"]]
        with pytest.raises(DocumentError) as exc:
            parse(json.dumps(obj))
        assert exc.value.path.startswith("/payload/alpha")


class TestReportDocuments:
    def test_check_report_round_trip(self):
        from bihomcheck.serialize import doc_check_report
        from bihomcheck.structures import check_bihom_associative
        verdict = check_bihom_associative(catalogue_entry("na2").structure)
        doc = doc_check_report("bihom-assoc", verdict)
        assert parse(serialize(doc)) == doc

    def test_theorem_report_round_trip(self, m2):
        from bihomcheck.serialize import doc_theorem_report
        from bihomcheck.theorems import run_t9
        report = run_t9(m2, Tensor2.from_pairs(4, {(1, 1): 1}))
        doc = doc_theorem_report(report)
        assert parse(serialize(doc)) == doc


class TestConverters:
    def test_algebra_lifts_to_bihom(self):
        doc = catalogue_document(catalogue_entry("dx2"))
        a = to_bihom_algebra(doc)
        assert a.alpha.is_identity() and a.unit == (F(1), F(0))

    def test_kind_mismatch(self):
        doc = doc_from_tensor2(Tensor2.zero(2))
        with pytest.raises(DocumentError):
            to_linear_map(doc)
        with pytest.raises(DocumentError):
            to_bihom_algebra(doc)
        assert to_tensor2(doc) == Tensor2.zero(2)
