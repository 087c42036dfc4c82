import os
import tempfile
from unittest import TestCase
from unittest import mock

import pytest

from habitat.client import CacheMissError
from habitat.client import ResponseCache
from habitat.common.encoding import sha256_hex


class ResponseCacheTest(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.cache_dir = self.tmp.name
        self.url = "https://api.gbif.org/v1/species/match?name=Ajuga+reptans"

    def tearDown(self):
        self.tmp.cleanup()

    def test_path_is_url_hash(self):
        cache = ResponseCache(self.cache_dir)
        self.assertEqual(
            cache.get_path(self.url),
            os.path.join(self.cache_dir, "gbif", sha256_hex(self.url) + ".json"),
        )

    def test_fetch_stores_and_reuses(self):
        cache = ResponseCache(self.cache_dir)
        loader = mock.Mock(return_value={"usageKey": 1})
        self.assertEqual(cache.fetch(self.url, loader), {"usageKey": 1})
        self.assertEqual(cache.fetch(self.url, loader), {"usageKey": 1})
        loader.assert_called_once_with(self.url)
        self.assertTrue(os.path.isfile(cache.get_path(self.url)))
        leftovers = [n for n in os.listdir(os.path.dirname(cache.get_path(self.url))) if n.endswith(".tmp")]
        self.assertEqual(leftovers, [])

    def test_offline_miss(self):
        cache = ResponseCache(self.cache_dir, offline=True)
        loader = mock.Mock()
        with pytest.raises(CacheMissError) as exc_info:
            cache.fetch(self.url, loader)
        self.assertIn(self.url, str(exc_info.value))
        self.assertEqual(exc_info.value.exit_code, 3)
        loader.assert_not_called()

    def test_offline_hit(self):
        ResponseCache(self.cache_dir).set(self.url, {"usageKey": 2})
        cache = ResponseCache(self.cache_dir, offline=True)
        self.assertEqual(cache.fetch(self.url, mock.Mock()), {"usageKey": 2})

    def test_unreadable_entry_is_a_miss(self):
        cache = ResponseCache(self.cache_dir)
        path = cache.get_path(self.url)
        os.makedirs(os.path.dirname(path))
        with open(path, "w") as f:
            f.write("{truncated")
        self.assertIsNone(cache.get(self.url))
