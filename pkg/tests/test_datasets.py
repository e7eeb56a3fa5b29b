import hashlib
import threading
import time

import numpy as np
import pytest

from tracklight import datasets
from tracklight.datasets import (
    DatasetRegistryEntry,
    Segment,
    fetch_segment,
    find_entry,
    get_dataset_sample,
    load_registry,
    load_segment,
    parse_registry,
)
from tracklight.exceptions import FormatError, IntegrityError, TransferError

PAYLOAD = b"frame,t_ms,a_x,a_y\n0,0,1,2\n1,50,2,3\n"
DIGEST = hashlib.sha256(PAYLOAD).hexdigest()


class Recorder:
    """Transport double that counts requests and serves fixed bytes."""

    def __init__(self, payload=PAYLOAD, delay=0.0):
        self.payload = payload
        self.delay = delay
        self.calls = []

    def __call__(self, url):
        self.calls.append(url)
        time.sleep(self.delay)
        return self.payload


def registry_line(dataset="eigd", segment="48dcd3", sha=DIGEST, fmt="wide_csv", rate="20"):
    return f"{dataset}\t{segment}\thttps://example.org/{segment}.csv\t{sha}\t{fmt}\t{rate}\t0,40,0,20,meters,handball\n"


@pytest.fixture
def entry():
    return parse_registry(registry_line())[0]


class TestRegistry:
    def test_single_entry(self, tmp_path):
        path = tmp_path / "registry.tsv"
        path.write_text("# comment\n\n" + registry_line())
        (entry,) = load_registry(path)
        assert entry.dataset_id == "eigd"
        assert entry.segments["48dcd3"].sha256 == DIGEST
        assert entry.pitch.xlim == (0, 40) and entry.pitch.sport.value == "handball"
        assert entry.framerate == 20

    def test_segments_grouped(self):
        entries = parse_registry(registry_line(segment="a") + registry_line(segment="b"))
        assert len(entries) == 1 and list(entries[0].segments) == ["a", "b"]

    def test_duplicate(self):
        with pytest.raises(FormatError):
            parse_registry(registry_line() + registry_line())

    def test_conflicting_metadata(self):
        with pytest.raises(FormatError):
            parse_registry(registry_line(segment="a") + registry_line(segment="b", rate="25"))

    @pytest.mark.parametrize(
        "line",
        [
            registry_line(sha=DIGEST[:63]),
            registry_line(sha="z" * 64),
            registry_line(fmt="xml"),
            registry_line(rate="-1"),
            registry_line(segment=""),
            "eigd\tonly\tthree\n",
            registry_line().replace("0,40,0,20", "40,0,0,20"),
        ],
    )
    def test_malformed(self, line):
        with pytest.raises(FormatError):
            parse_registry(line)

    def test_entry_invariants(self):
        with pytest.raises(ValueError):
            DatasetRegistryEntry("x", {"s": Segment("u", "abc", "dat")}, get_dataset_sample()[3], 20)

    def test_find_entry(self, entry):
        assert find_entry([entry], "eigd") is entry
        with pytest.raises(LookupError):
            find_entry([entry], "nope")


class TestFetch:
    def test_download_then_cache_hit(self, entry, tmp_path):
        recorder = Recorder()
        path = fetch_segment(entry, "48dcd3", tmp_path, recorder)
        assert path == tmp_path / "eigd" / "48dcd3"
        assert path.read_bytes() == PAYLOAD
        assert len(recorder.calls) == 1
        again = Recorder()
        assert fetch_segment(entry, "48dcd3", tmp_path, again) == path
        assert again.calls == []

    def test_tampered_cache_is_refetched(self, entry, tmp_path):
        path = fetch_segment(entry, "48dcd3", tmp_path, Recorder())
        path.write_bytes(b"tampered")
        recorder = Recorder()
        fetch_segment(entry, "48dcd3", tmp_path, recorder)
        assert len(recorder.calls) == 1 and path.read_bytes() == PAYLOAD

    def test_mismatch_removes_file(self, entry, tmp_path):
        path = fetch_segment(entry, "48dcd3", tmp_path, Recorder())
        path.write_bytes(b"tampered")
        with pytest.raises(IntegrityError):
            fetch_segment(entry, "48dcd3", tmp_path, Recorder(payload=b"still wrong"))
        assert not path.exists()
        assert [p.name for p in (tmp_path / "eigd").iterdir() if not p.name.endswith(".lock")] == []

    def test_unknown_segment(self, entry, tmp_path):
        with pytest.raises(LookupError):
            fetch_segment(entry, "zz", tmp_path, Recorder())

    def test_network_failure_leaves_cache(self, entry, tmp_path):
        folder = tmp_path / "eigd"
        folder.mkdir()
        (folder / "48dcd3").write_bytes(b"old")

        def broken(url):
            raise ConnectionError("unreachable")

        with pytest.raises(TransferError):
            fetch_segment(entry, "48dcd3", tmp_path, broken)
        assert (folder / "48dcd3").read_bytes() == b"old"

    def test_environment_cache_dir(self, entry, tmp_path, monkeypatch):
        monkeypatch.setenv("TRACKLIGHT_CACHE", str(tmp_path / "env"))
        path = fetch_segment(entry, "48dcd3", transport=Recorder())
        assert path == tmp_path / "env" / "eigd" / "48dcd3"

    def test_concurrent_fetches_serialize(self, entry, tmp_path):
        recorder = Recorder(delay=0.05)
        threads = [threading.Thread(target=fetch_segment, args=(entry, "48dcd3", tmp_path, recorder)) for _ in range(6)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(recorder.calls) == 1

    def test_load_segment(self, entry, tmp_path):
        objects, report = load_segment(entry, "48dcd3", tmp_path, Recorder())
        assert objects["tracking"].framerate == 20.0
        assert report.rows_read == 2


class TestSample:
    def test_shape(self):
        home, away, ball, pitch = get_dataset_sample()
        assert home.n_players == 7 and away.n_players == 7
        assert ball.n_players == 1 and ball.player_ids == ("ball",)
        assert home.n_frames == away.n_frames == ball.n_frames == 1200
        assert home.framerate == 20.0
        assert pitch.xlim == (0, 40) and pitch.ylim == (0, 20) and pitch.unit.value == "meters"

    def test_deterministic(self):
        first = get_dataset_sample()
        datasets._sample.cache_clear()
        second = get_dataset_sample()
        for a, b in zip(first[:3], second[:3]):
            assert a.coords.tobytes() == b.coords.tobytes()

    def test_missing_samples_per_team(self):
        home, away, _, _ = get_dataset_sample()
        assert home.missing.any() and away.missing.any()
