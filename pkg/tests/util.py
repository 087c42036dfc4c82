import json
import os
from unittest import mock

import requests

from habitat.client import ResponseCache
from habitat.occurrence import GbifClient
from habitat.synth import write_synthetic_rasters

ROOT = os.path.abspath(os.path.dirname(__file__))

#: observation window pinned so recorded cache keys stay valid
FIXTURE_YEAR_TO = 2024


def get_file_path(name):
    return os.path.join(ROOT, "files", name)


def read_file_path(name):
    with open(get_file_path(name)) as f:
        if name.endswith(".json"):
            return json.load(f)
        return f.read()


def read_binary_file(name):
    with open(get_file_path(name), "rb") as f:
        return f.read()


def mock_send_value(body, status_code=200):
    resp = mock.MagicMock(spec=requests.Response)
    resp.cookies = []
    resp.status_code = status_code
    if isinstance(body, (dict, list)):
        resp.json = lambda: body
    else:
        resp.text = body

        def fail():
            raise ValueError("not JSON")

        resp.json = fail
    return resp


def mock_json_response(payload, status_code=200):
    def fake_send(r, **kwargs):
        return mock_send_value(payload, status_code)

    return fake_send


def mock_send_sequence(*values):
    """``send`` replacement answering with ``values`` in turn; exceptions
    in ``values`` are raised. Sent requests are collected in ``.requests``.
    """
    queue = list(values)

    def fake_send(r, **kwargs):
        fake_send.requests.append(r)
        value = queue.pop(0)
        if isinstance(value, Exception):
            raise value
        return value

    fake_send.requests = []
    return fake_send


def populate_gbif_cache(cache_dir, name, year_to=FIXTURE_YEAR_TO):
    """Store a recorded GBIF conversation from ``tests/files`` in a
    response cache, keyed by the URLs the client will request.
    """
    recorded = read_file_path(name)
    cache = ResponseCache(cache_dir, namespace="gbif")
    client = GbifClient(cache=cache, year_to=year_to)
    cache.set(client.get_match_url(recorded["name"]), recorded["match"])
    usage_key = recorded["match"].get("acceptedUsageKey") or recorded["match"].get("usageKey")
    offset = 0
    for page in recorded.get("pages", []):
        cache.set(client.get_search_url(usage_key, offset), page)
        offset += len(page["results"])
    return cache


#: extent of the synthetic climate layers used by pipeline tests
CLIMATE_BOUNDS = (4.0, 44.0, 12.0, 51.0)


def prepare_hermetic_run(directory, gbif_fixture="gbif_ajuga_reptans.json", **overrides):
    """Synthetic rasters and a recorded GBIF cache under ``directory``.

    :return: config dict for an offline run on those inputs
    """
    climate_dir = os.path.join(directory, "climate")
    cache_dir = os.path.join(directory, "cache")
    write_synthetic_rasters(climate_dir, CLIMATE_BOUNDS, cell_size=0.05, seed=7)
    if gbif_fixture:
        populate_gbif_cache(cache_dir, gbif_fixture)
    config = {
        "species_name": "Ajuga reptans",
        "cache_dir": cache_dir,
        "climate_dir": climate_dir,
        "land_mask_path": get_file_path("land_mask.geojson"),
        "year_to": FIXTURE_YEAR_TO,
        "offline": True,
        "bootstrap": 20,
        "llm_enabled": False,
    }
    config.update(overrides)
    return config


def write_config(directory, config):
    path = os.path.join(directory, "config.json")
    with open(path, "w") as f:
        json.dump(config, f)
    return path
