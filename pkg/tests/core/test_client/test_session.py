from unittest import TestCase

import pytest
from requests.exceptions import ConnectionError as RequestsConnectionError
from requests.exceptions import Timeout

from habitat.client import HabitatSession
from habitat.client import NetworkError
from habitat.consts import default_user_agent

from ...util import mock_json_response
from ...util import mock_send_sequence
from ...util import mock_send_value


class HabitatSessionTest(TestCase):
    def setUp(self):
        self.delays = []
        self.sess = HabitatSession(max_attempts=4, backoff=1.0, sleep=self.delays.append)

    def test_default_headers_and_timeout(self):
        def verifier(r, **kwargs):
            self.assertEqual(r.headers["User-Agent"], default_user_agent)
            self.assertEqual(kwargs["timeout"], 10)
            return mock_send_value({"ok": True})

        self.sess.send = verifier
        self.assertEqual(self.sess.get_json("https://i.b/x"), {"ok": True})

    def test_retry_with_exponential_backoff(self):
        self.sess.send = mock_send_sequence(
            mock_send_value({}, 503),
            Timeout("slow"),
            RequestsConnectionError("reset"),
            mock_send_value({"ok": True}),
        )
        self.assertEqual(self.sess.get_json("https://i.b/x"), {"ok": True})
        self.assertEqual(self.delays, [1.0, 2.0, 4.0])

    def test_attempts_exhausted(self):
        self.sess.send = mock_send_sequence(*[mock_send_value({}, 500) for _ in range(4)])
        with pytest.raises(NetworkError) as exc_info:
            self.sess.get("https://i.b/x")
        self.assertEqual(exc_info.value.status_code, 500)
        self.assertEqual(exc_info.value.url, "https://i.b/x")
        self.assertEqual(len(self.sess.send.requests), 4)

    def test_client_errors_are_not_retried(self):
        self.sess.send = mock_send_sequence(mock_send_value({"error": "bad"}, 400))
        with pytest.raises(NetworkError) as exc_info:
            self.sess.get_json("https://i.b/x")
        self.assertEqual(exc_info.value.status_code, 400)
        self.assertEqual(self.delays, [])

    def test_non_json_body(self):
        self.sess.send = mock_json_response("<html>", 200)
        with pytest.raises(NetworkError):
            self.sess.get_json("https://i.b/x")

    def test_session_configure(self):
        sess = HabitatSession(trust_env=False, user_agent="habitat-tests")
        self.assertFalse(sess.trust_env)
        self.assertEqual(sess.headers["User-Agent"], "habitat-tests")
