"""HTTP routes: auth, envelopes, uploads, search, drawings, exports."""

import base64

import pytest
from fastapi.testclient import TestClient

from graphvault import codecs
from graphvault.config import ApiKey, Config, ConfigError, load_config, parse_config
from graphvault.scheduler import DEFAULT_LEVELS, QueueConfig
from graphvault.service import create_app
from graphvault.store import Store
from tests.conftest import drain
from tests.corpus import cycle, petersen

WRITER = {"x-api-key": "write-key"}
READER = {"x-api-key": "read-key"}


@pytest.fixture
def store():
    s = Store(":memory:", queue_config=QueueConfig(levels=(60.0,)))
    yield s
    s.close()


@pytest.fixture
def client(store):
    config = Config(api_keys=(
        ApiKey(key="write-key", name="ann", role="contributor"),
        ApiKey(key="read-key", name="bob", role="reader"),
    ))
    with TestClient(create_app(store, config)) as c:
        yield c


def upload(client, g6="Bw", **extra):
    return client.post("/graphs", headers=WRITER,
                       json={"format": "graph6", "data": g6, **extra})


class TestRegistry:
    def test_invariants_listing(self, client):
        res = client.get("/invariants")
        assert res.status_code == 200
        listing = res.json()["invariants"]
        assert len(listing) == 44
        assert listing[0].keys() == {"id", "kind", "display_name", "definition"}
        kinds = {row["kind"] for row in listing}
        assert kinds == {"boolean", "integer", "real"}


class TestAuth:
    def test_upload_requires_key(self, client):
        res = client.post("/graphs", json={"data": "Bw"})
        assert res.status_code == 401
        body = res.json()
        assert body["code"] == "unauthenticated"
        assert set(body) == {"code", "message", "detail"}

    def test_unknown_key_rejected(self, client):
        res = client.post("/graphs", headers={"x-api-key": "bogus"},
                          json={"data": "Bw"})
        assert res.status_code == 401

    def test_reader_key_forbidden_for_writes(self, client):
        for path, body in (("/graphs", {"data": "Bw"}),
                           ("/graphs/1/comments", {"text": "x"}),
                           ("/graphs/1/marks", {"invariant": "girth"}),
                           ("/graphs/1/embeddings", {"coords": []})):
            res = client.post(path, headers=READER, json=body)
            assert res.status_code == 403, path
            assert res.json()["code"] == "forbidden"

    def test_reads_are_public(self, client):
        upload(client)
        assert client.get("/graphs/1").status_code == 200
        assert client.post("/search", json={}).status_code == 200


class TestUpload:
    def test_created_with_location(self, client):
        res = upload(client, name="triangle")
        assert res.status_code == 201
        assert res.headers["location"] == "/graphs/1"
        body = res.json()
        assert body == {"id": 1, "created": True, "location": "/graphs/1"}

    def test_duplicate_seeother_points_at_original(self, client):
        upload(client)
        res = client.post("/graphs", headers=WRITER,
                          json={"format": "graph6", "data": "Bw"},
                          follow_redirects=False)
        assert res.status_code == 303
        assert res.headers["location"] == "/graphs/1"
        assert res.json()["created"] is False

    def test_base64_payload(self, client, store):
        data = base64.b64encode(bytes([3, 2, 3, 0, 3, 0])).decode()
        res = client.post("/graphs", headers=WRITER,
                          json={"format": "multicode", "data_base64": data})
        assert res.status_code == 201
        assert store.get_graph(1).graph6 == "Bw"

    def test_upload_with_annotations(self, client, store):
        res = upload(client, name="K3", comments=["tight"], marks=["girth"])
        assert res.status_code == 201
        detail = store.get_graph(res.json()["id"])
        assert [c.text for c in detail.comments] == ["tight"]
        assert [c.author for c in detail.comments] == ["ann"]
        assert [m.invariant_id for m in detail.marks] == ["girth"]

    def test_bad_requests(self, client):
        checks = [
            ({"format": "graph6"}, 400, "bad_request"),
            ({"data": 5}, 400, "bad_request"),
            ({"data_base64": "!!"}, 400, "bad_request"),
            ({"data": "Bw", "name": 7}, 400, "bad_request"),
            ({"data": "Bw", "comments": "x"}, 400, "bad_request"),
            ({"data": "Bw", "marks": [3]}, 400, "bad_request"),
            ({"format": "dot", "data": "Bw"}, 415, "unknown_format"),
        ]
        for body, status, code in checks:
            res = client.post("/graphs", headers=WRITER, json=body)
            assert res.status_code == status, body
            assert res.json()["code"] == code, body

    def test_undecodable_graph_reports_offset(self, client):
        res = client.post("/graphs", headers=WRITER,
                          json={"data": "B\x1c"})
        assert res.status_code == 400
        body = res.json()
        assert body["code"] == "parse_error"
        assert body["detail"] == {"offset": 1}

    def test_invalid_json_body(self, client):
        res = client.post(
            "/graphs", headers={**WRITER, "content-type": "application/json"},
            content=b"{nope")
        assert res.status_code == 400
        assert res.json()["code"] == "bad_request"


class TestDetail:
    def test_full_detail_shape(self, client):
        upload(client, name="triangle")
        res = client.get("/graphs/1")
        body = res.json()
        assert body["graph6"] == "Bw"
        assert (body["n"], body["m"]) == (3, 3)
        assert body["name"] == "triangle"
        assert body["uploader"] == "ann"
        assert body["adjacency_matrix"] == "0 1 1\n1 0 1\n1 1 0\n"
        assert body["adjacency_list"] == "0: 1 2\n1: 0 2\n2: 0 1\n"
        assert len(body["invariants"]) == 44
        assert all(r["status"] == "pending" for r in body["invariants"])
        assert all(r["display"] == "pending" for r in body["invariants"])

    def test_detail_after_drain_shows_values(self, client, store):
        upload(client)
        drain(store)
        body = client.get("/graphs/1").json()
        by_id = {r["invariant"]: r for r in body["invariants"]}
        assert by_id["girth"] == {"invariant": "girth", "status": "done",
                                  "value": "3", "display": "3"}

    def test_missing_graph(self, client):
        res = client.get("/graphs/42")
        assert res.status_code == 404
        assert res.json()["code"] == "not_found"

    def test_non_integer_id_rejected_cleanly(self, client):
        res = client.get("/graphs/xyz")
        assert res.status_code == 400
        assert res.json()["code"] == "malformed_request"

    def test_status_route_tracks_quiescence(self, client, store):
        upload(client)
        res = client.get("/graphs/1/status")
        assert res.json()["quiescent"] is False
        drain(store)
        body = client.get("/graphs/1/status").json()
        assert body["quiescent"] is True
        assert body["invariants"]["girth"]["value"] == "3"


class TestExport:
    def test_graph6_export(self, client):
        upload(client)
        res = client.get("/graphs/1/export")
        assert res.status_code == 200
        assert res.text == "Bw\n"
        assert res.headers["content-type"].startswith("text/plain")

    def test_multicode_export(self, client):
        upload(client)
        res = client.get("/graphs/1/export", params={"format": "mc"})
        assert res.content == bytes([3, 2, 3, 0, 3, 0])
        assert res.headers["content-type"] == "application/octet-stream"

    def test_matrix_export(self, client):
        upload(client)
        res = client.get("/graphs/1/export", params={"format": "adj-matrix"})
        assert res.text == "0 1 1\n1 0 1\n1 1 0\n"

    def test_unknown_format(self, client):
        upload(client)
        res = client.get("/graphs/1/export", params={"format": "dot"})
        assert res.status_code == 415
        assert res.json()["code"] == "unknown_format"


class TestMutations:
    def test_comment_flow(self, client):
        upload(client)
        res = client.post("/graphs/1/comments", headers=WRITER,
                          json={"text": "nice"})
        assert res.status_code == 201
        assert client.get("/graphs/1").json()["comments"][0]["text"] == "nice"
        res = client.post("/graphs/1/comments", headers=WRITER,
                          json={"text": ""})
        assert res.status_code == 400
        res = client.post("/graphs/9/comments", headers=WRITER,
                          json={"text": "x"})
        assert res.status_code == 404

    def test_mark_flow(self, client):
        upload(client)
        res = client.post("/graphs/1/marks", headers=WRITER,
                          json={"invariant": "girth"})
        assert res.status_code == 201
        marks = client.get("/graphs/1").json()["marks"]
        assert marks == [{"invariant": "girth", "author": "ann"}]
        res = client.post("/graphs/1/marks", headers=WRITER,
                          json={"invariant": "nope"})
        assert res.status_code == 400
        assert res.json()["code"] == "unknown_invariant"

    def test_embedding_flow(self, client):
        upload(client)
        res = client.post("/graphs/1/embeddings", headers=WRITER,
                          json={"coords": [[0, 0], [1, 0], [0.5, 1]]})
        assert res.status_code == 201
        assert res.json() == {"seq": 1}
        res = client.post("/graphs/1/embeddings", headers=WRITER,
                          json={"coords": [[0, 0]]})
        assert res.status_code == 400
        assert res.json()["code"] == "coordinate_count"
        res = client.post("/graphs/1/embeddings", headers=WRITER,
                          json={"coords": "garbage"})
        assert res.status_code == 400
        assert res.json()["code"] == "bad_request"


class TestDrawings:
    def seed(self, client):
        g6 = codecs.graph6_encode(petersen())
        upload(client, g6=g6)
        coords = [[0.1 * i, 0.05 * i] for i in range(10)]
        client.post("/graphs/1/embeddings", headers=WRITER,
                    json={"coords": coords})

    def test_svg_drawing(self, client):
        self.seed(client)
        res = client.get("/graphs/1/drawings/1.svg")
        assert res.status_code == 200
        assert res.headers["content-type"].startswith("image/svg+xml")
        assert res.text.count("<circle") == 10
        assert res.text.count("<line") == 15

    def test_svg_labels_toggle(self, client):
        self.seed(client)
        res = client.get("/graphs/1/drawings/1.svg", params={"labels": "true"})
        assert res.text.count("<text") == 10

    def test_tikz_drawing(self, client):
        self.seed(client)
        res = client.get("/graphs/1/drawings/1.tikz")
        assert res.status_code == 200
        assert res.text.count("\\node") == 10
        assert res.headers["content-type"].startswith("text/plain")

    def test_unknown_suffix(self, client):
        self.seed(client)
        res = client.get("/graphs/1/drawings/1.png")
        assert res.status_code == 415

    def test_missing_embedding(self, client):
        self.seed(client)
        assert client.get("/graphs/1/drawings/5.svg").status_code == 404
        assert client.get("/graphs/1/drawings/x.svg").status_code == 404


class TestSearch:
    def seed(self, client, store):
        for n in (3, 4, 5, 6):
            upload(client, g6=codecs.graph6_encode(cycle(n)),
                   name=f"cycle {n}")
        drain(store)

    def test_search_rows(self, client, store):
        self.seed(client, store)
        res = client.post("/search", json={
            "predicates": [{"type": "numeric", "invariant": "girth",
                            "op": ">=", "value": 5}],
            "sort": {"key": "girth", "dir": "desc"},
            "columns": ["girth"],
        })
        body = res.json()
        assert body["total"] == 2
        assert [row["id"] for row in body["rows"]] == [4, 3]
        assert body["rows"][0]["cells"] == [
            {"invariant": "girth", "status": "done", "value": "6",
             "display": "6"}]
        assert body["rows"][0]["name"] == "cycle 6"

    def test_malformed_query(self, client):
        res = client.post("/search", json={"sort": {"dir": "upward"}})
        assert res.status_code == 400
        assert res.json()["code"] == "malformed_query"

    def test_unknown_invariant_in_query(self, client):
        res = client.post("/search", json={
            "predicates": [{"type": "numeric", "invariant": "zzz",
                            "op": "=", "value": 1}]})
        assert res.status_code == 400
        assert res.json()["code"] == "unknown_invariant"

    def test_search_export_streams_all_matches(self, client, store):
        self.seed(client, store)
        res = client.post("/search/export",
                          params={"format": "graph6"},
                          json={"page": {"offset": 1, "limit": 1}})
        assert res.status_code == 200
        lines = res.text.splitlines()
        assert len(lines) == 4
        assert lines[0] == "Bw"

    def test_search_export_multicode(self, client, store):
        upload(client)
        res = client.post("/search/export", params={"format": "multicode"},
                          json={})
        assert res.content == bytes([3, 2, 3, 0, 3, 0])
        assert res.headers["content-type"] == "application/octet-stream"


class TestClasses:
    def test_class_listing_and_contents(self, client, store):
        store.import_class("cycles", ["Bw", "Cl", "Dhc"],
                           description="cycle graphs")
        body = client.get("/classes").json()
        assert body["classes"] == [
            {"slug": "cycles", "description": "cycle graphs", "count": 3}]
        res = client.get("/classes/cycles")
        assert res.text == "Bw\nCl\nDhc\n"
        res = client.get("/classes/cycles", params={"order": 4})
        assert res.text == "Cl\n"

    def test_missing_class(self, client):
        assert client.get("/classes/none").status_code == 404


class TestLegacyRedirect:
    def test_redirects_to_graph(self, client):
        res = client.get("/ViewGraphInfo.action", params={"id": 3},
                         follow_redirects=False)
        assert res.status_code == 301
        assert res.headers["location"] == "/graphs/3"

    def test_missing_id(self, client):
        res = client.get("/ViewGraphInfo.action", follow_redirects=False)
        assert res.status_code == 400


class TestLimits:
    def test_oversized_body_rejected(self, store):
        config = Config(api_keys=(ApiKey("k", "ann", "contributor"),),
                        max_body_bytes=200)
        with TestClient(create_app(store, config)) as client:
            big = "Bw" + " " * 500
            res = client.post("/graphs", headers={"x-api-key": "k"},
                              json={"data": big})
            assert res.status_code == 400
            assert res.json()["code"] == "body_too_large"

    def test_rate_limit(self, store, monkeypatch):
        import graphvault.service as service_module
        monkeypatch.setattr(service_module.time, "time", lambda: 1000.0)
        config = Config(rate_per_minute=2)
        with TestClient(create_app(store, config)) as client:
            assert client.get("/invariants").status_code == 200
            assert client.get("/invariants").status_code == 200
            res = client.get("/invariants")
            assert res.status_code == 429
            assert res.json()["code"] == "rate_limited"


class TestConfigParsing:
    def test_defaults(self):
        cfg = parse_config({})
        assert cfg.host == "127.0.0.1"
        assert cfg.port == 8080
        assert cfg.queue.levels == DEFAULT_LEVELS
        assert cfg.max_body_bytes == 10 * 1024 * 1024
        assert cfg.store_path() == "./data/graphvault.sqlite"

    def test_full_toml(self, tmp_path):
        path = tmp_path / "vault.toml"
        path.write_text("""
[server]
host = "0.0.0.0"
port = 9999
data_dir = "/var/vault"

[queue]
levels = [1.0, 10.0]
workers = 3

[limits]
max_body_bytes = 1024
rate_per_minute = 60
cors_origins = ["https://example.org"]

[auth]
keys = [
  {key = "abc", name = "ann", role = "contributor"},
  {key = "def", name = "bob"},
]
""")
        cfg = load_config(str(path))
        assert cfg.host == "0.0.0.0"
        assert cfg.port == 9999
        assert cfg.queue == QueueConfig(levels=(1.0, 10.0), workers=3)
        assert cfg.max_body_bytes == 1024
        assert cfg.rate_per_minute == 60
        assert cfg.cors_origins == ("https://example.org",)
        assert cfg.api_keys[0] == ApiKey("abc", "ann", "contributor")
        assert cfg.api_keys[1].role == "reader"

    def test_rejections(self):
        bad = [
            {"server": []},
            {"queue": {"levels": [10.0, 1.0]}},
            {"queue": {"levels": "fast"}},
            {"auth": {"keys": "nope"}},
            {"auth": {"keys": [{"key": "a", "name": "x", "role": "admin"}]}},
            {"auth": {"keys": [{"key": "a"}]}},
            {"auth": {"keys": [{"key": "a", "name": "x"},
                               {"key": "a", "name": "y"}]}},
            {"limits": {"cors_origins": "all"}},
        ]
        for doc in bad:
            with pytest.raises(ConfigError):
                parse_config(doc)

    def test_bad_toml_file(self, tmp_path):
        path = tmp_path / "broken.toml"
        path.write_text("[server\nhost=")
        with pytest.raises(ConfigError):
            load_config(str(path))
