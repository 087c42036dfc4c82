"""habitat.pipeline.runner.
~~~~~~~~~~~~~~~~~~~~~~~~~

Runs identify, fetch, sample, extract, discover, infer and explain in
order. Every stage writes its artefacts to ``{cache_dir}/runs/{run_id}/``
and any stage can be started on its own from the artefacts of the stages
before it.
"""

import datetime
import json
import logging
import os

from habitat import __version__
from habitat.climate import extract_features
from habitat.climate import load_bioclim
from habitat.climate.variables import BIO_VARIABLES
from habitat.common.errors import HabitatError
from habitat.common.errors import InvalidConfigError
from habitat.common.errors import MissingInput
from habitat.common.errors import StageError
from habitat.discovery import DataMatrix
from habitat.discovery import WeightedDag
from habitat.discovery import create_learner
from habitat.explain import Explanation
from habitat.explain import LlmConfig
from habitat.explain import explain_effects
from habitat.inference import CausalEstimate
from habitat.inference import estimate_effects
from habitat.occurrence import OccurrenceRecord
from habitat.occurrence import TaxonMatch
from habitat.occurrence import create_client
from habitat.recognition import FixtureBackend
from habitat.recognition import create_backend
from habitat.recognition import gate
from habitat.recognition import guess_content_type
from habitat.recognition import identify
from habitat.sampling import LandMask
from habitat.sampling import SamplePoint
from habitat.sampling import buffered_bbox
from habitat.sampling import sample_pseudo_absences

from .dataset import FEATURE_COLUMNS
from .dataset import export_dataset
from .dataset import import_dataset
from .dataset import to_samples
from .errors import MissingArtefact
from .errors import SpeciesRejected
from .report import HabitatReport
from .report import write_report

log = logging.getLogger(__name__)

STAGES = ("identify", "fetch", "sample", "extract", "discover", "infer", "explain")

#: artefact read back when a stage's result is not in memory
STAGE_ARTEFACTS = {
    "identify": "identification.json",
    "fetch": "occurrences.json",
    "sample": "samples.json",
    "extract": "dataset.csv",
    "discover": "dag.json",
    "infer": "effects.json",
    "explain": "explanations.json",
}


def utc_now():
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


class PipelineRunner:
    """Execute the pipeline for one validated :class:`PipelineConfig`.

    :param gbif_session: session for GBIF requests on cache misses.
    :param identify_session: session for the remote identifier backend.
    :param llm_session: session for the chat completions endpoint.
    :param environ: mapping read for ``HABITAT_*`` variables, defaults to
        ``os.environ``.
    """

    def __init__(
        self,
        config,
        gbif_session=None,
        identify_session=None,
        llm_session=None,
        environ=None,
    ):
        self.config = config
        self.gbif_session = gbif_session
        self.identify_session = identify_session
        self.llm_session = llm_session
        self.environ = os.environ if environ is None else environ
        self.run_dir = config.run_dir
        self._results = {}

    def get_path(self, name):
        return os.path.join(self.run_dir, name)

    def save_json(self, name, data):
        os.makedirs(self.run_dir, exist_ok=True)
        with open(self.get_path(name), "w", encoding="utf-8") as f:
            f.write(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")

    def save_text(self, name, text):
        os.makedirs(self.run_dir, exist_ok=True)
        with open(self.get_path(name), "w", encoding="utf-8") as f:
            f.write(text)

    def load_json(self, name, stage):
        path = self.get_path(name)
        if not os.path.isfile(path):
            raise MissingArtefact(path, stage)
        with open(path, encoding="utf-8") as f:
            return json.load(f)

    def run_stage(self, stage):
        """Run one stage. Failures are raised as :class:`StageError` with
        the stage name; artefacts already written stay on disk.
        """
        if stage not in STAGES:
            raise ValueError(f'Unknown stage "{stage}"')
        log.info("Stage %s (run %s)", stage, self.config.run_id)
        try:
            result = getattr(self, f"stage_{stage}")()
        except StageError:
            raise
        except (HabitatError, OSError) as error:
            raise StageError(stage, error) from error
        self._results[stage] = result
        return result

    def get_result(self, stage):
        if stage in self._results:
            return self._results[stage]
        loader = getattr(self, f"load_{stage}")
        try:
            result = loader()
        except (HabitatError, OSError, KeyError, TypeError, ValueError) as error:
            if isinstance(error, MissingArtefact):
                raise
            path = self.get_path(STAGE_ARTEFACTS[stage])
            raise MissingArtefact(path, stage) from error
        self._results[stage] = result
        return result

    def run(self):
        """Run every stage and write ``report.json`` and ``report.md``.

        :return: :class:`HabitatReport`
        """
        started = utc_now()
        os.makedirs(self.run_dir, exist_ok=True)
        for stage in STAGES:
            self.run_stage(stage)
        try:
            report = self.build_report({"started": started, "finished": utc_now()})
            write_report(self.run_dir, report)
        except (HabitatError, OSError) as error:
            raise StageError("report", error) from error
        log.info("Run %s finished, report in %s", self.config.run_id, self.run_dir)
        return report

    # identify

    def create_backend(self):
        name = self.config.identify_backend
        if name == FixtureBackend.name:
            return FixtureBackend.from_file(self.config.identify_fixture)
        url = self.config.identify_url or self.environ.get("HABITAT_IDENTIFY_URL")
        if not url:
            raise InvalidConfigError(
                "identify_url", "is required by the remote backend (or HABITAT_IDENTIFY_URL)"
            )
        return create_backend(name, url, session=self.identify_session)

    def stage_identify(self):
        config = self.config
        if config.species_name:
            result = {
                "input": config.species_name,
                "input_kind": "name",
                "species_name": config.species_name.strip(),
                "identification": None,
                "gate": None,
            }
            self.save_json("identification.json", result)
            return result

        if not os.path.isfile(config.image_path):
            raise MissingInput(config.image_path, "image")
        with open(config.image_path, "rb") as f:
            image = f.read()
        identification = identify(
            image, self.create_backend(), guess_content_type(config.image_path)
        )
        gate_result = gate(identification, config.confidence_threshold)
        result = {
            "input": config.image_path,
            "input_kind": "image",
            "species_name": identification.scientific_name,
            "identification": identification.to_dict(),
            "gate": {"accepted": gate_result.accepted, "threshold": gate_result.threshold},
        }
        self.save_json("identification.json", result)
        if not gate_result:
            raise SpeciesRejected(gate_result)
        return result

    def load_identify(self):
        if self.config.species_name and not os.path.isfile(self.get_path("identification.json")):
            return self.stage_identify()
        return self.load_json("identification.json", "identify")

    # fetch

    def stage_fetch(self):
        config = self.config
        species = self.get_result("identify")["species_name"]
        client = create_client(
            cache_dir=config.cache_dir,
            offline=config.offline,
            year_to=config.year_to,
            session=self.gbif_session,
        )
        try:
            taxon = client.match_taxon(species)
            records = client.fetch_occurrences(taxon, config.max_records)
        finally:
            self.save_json("query_urls.json", client.requested_urls)
        self.save_json("taxon.json", taxon.to_dict())
        self.save_json(
            "occurrences.json",
            {"records": [r.to_dict() for r in records], "query_urls": client.requested_urls},
        )
        return {"taxon": taxon, "records": records, "query_urls": list(client.requested_urls)}

    def load_fetch(self):
        data = self.load_json("occurrences.json", "fetch")
        taxon = TaxonMatch(**self.load_json("taxon.json", "fetch"))
        return {
            "taxon": taxon,
            "records": [OccurrenceRecord.from_dict(r) for r in data["records"]],
            "query_urls": data["query_urls"],
        }

    # sample

    def stage_sample(self):
        config = self.config
        if not config.land_mask_path:
            raise InvalidConfigError("land_mask_path", "is required to sample pseudo-absences")
        records = self.get_result("fetch")["records"]
        presences = [SamplePoint.from_record(r) for r in records]
        mask = LandMask.from_geojson(config.land_mask_path)
        bbox = buffered_bbox(presences, config.buffer_deg)
        absences = sample_pseudo_absences(
            presences,
            mask,
            ratio=config.ratio,
            exclusion_km=config.exclusion_km,
            rng_seed=config.seed,
            buffer_deg=config.buffer_deg,
        )
        result = {"bbox": bbox.to_dict(), "presences": presences, "absences": absences}
        self.save_json(
            "samples.json",
            {
                "bbox": bbox.to_dict(),
                "presences": [p.to_dict() for p in presences],
                "absences": [p.to_dict() for p in absences],
            },
        )
        return result

    def load_sample(self):
        data = self.load_json("samples.json", "sample")
        return {
            "bbox": data["bbox"],
            "presences": [SamplePoint.from_dict(p) for p in data["presences"]],
            "absences": [SamplePoint.from_dict(p) for p in data["absences"]],
        }

    # extract

    def stage_extract(self):
        config = self.config
        if not config.climate_dir:
            raise InvalidConfigError("climate_dir", "is required to extract climate values")
        samples = self.get_result("sample")
        points = samples["presences"] + samples["absences"]
        rasters = load_bioclim(config.climate_dir, config.climate_pattern)
        kept, dropped = extract_features(points, rasters)
        frame = export_dataset(self.get_path("dataset.csv"), kept)
        self.save_json(
            "extraction.json",
            {"n_points": len(points), "n_kept": len(kept), "n_dropped_nodata": dropped},
        )
        return {"frame": frame, "n_dropped_nodata": dropped}

    def load_extract(self):
        path = self.get_path("dataset.csv")
        if not os.path.isfile(path):
            raise MissingArtefact(path, "extract")
        info = self.load_json("extraction.json", "extract")
        return {"frame": import_dataset(path), "n_dropped_nodata": info["n_dropped_nodata"]}

    # discover

    def stage_discover(self):
        frame = self.get_result("extract")["frame"]
        data = DataMatrix(frame[FEATURE_COLUMNS].to_numpy(dtype=float), list(BIO_VARIABLES))
        learner = create_learner(self.config.learner, self.config.notears_config)
        dag = learner.fit(data)
        self.save_json("dag.json", {**dag.to_json(), "history": dag.history})
        self.save_text("dag.dot", dag.to_dot())
        return dag

    def load_discover(self):
        return WeightedDag.from_json(self.load_json("dag.json", "discover"))

    # infer

    def stage_infer(self):
        config = self.config
        samples = to_samples(self.get_result("extract")["frame"])
        dag = self.get_result("discover")
        estimates = estimate_effects(
            samples,
            dag,
            k=config.k_treatments,
            n_strata=config.n_strata,
            bootstrap=config.bootstrap,
            rng_seed=config.seed,
        )
        self.save_json("effects.json", [e.to_dict() for e in estimates])
        return estimates

    def load_infer(self):
        return [CausalEstimate.from_dict(e) for e in self.load_json("effects.json", "infer")]

    # explain

    def get_llm_config(self):
        if not self.config.llm_enabled:
            return None
        return LlmConfig.from_env(self.environ)

    def stage_explain(self):
        estimates = self.get_result("infer")
        species = self.get_result("fetch")["taxon"].matched_name
        explanations, summary = explain_effects(
            estimates, species, self.get_llm_config(), session=self.llm_session
        )
        self.save_json(
            "explanations.json",
            {"explanations": [e.to_dict() for e in explanations], "summary": summary},
        )
        return {"explanations": explanations, "summary": summary}

    def load_explain(self):
        data = self.load_json("explanations.json", "explain")
        return {
            "explanations": [Explanation.from_dict(e) for e in data["explanations"]],
            "summary": data["summary"],
        }

    # report

    def build_report(self, timestamps):
        identified = self.get_result("identify")
        fetched = self.get_result("fetch")
        sampled = self.get_result("sample")
        extracted = self.get_result("extract")
        dag = self.get_result("discover")
        explained = self.get_result("explain")

        frame = extracted["frame"]
        taxon = fetched["taxon"]
        identification = identified.get("identification") or {}
        llm_config = self.get_llm_config()

        n_presence = int(frame["presence"].sum())
        return HabitatReport(
            species={
                "input": identified["input"],
                "input_kind": identified["input_kind"],
                "identified_name": identification.get("scientific_name"),
                "matched_name": taxon.matched_name,
                "taxon_key": taxon.usage_key,
                "match_type": taxon.match_type,
                "confidence": identification.get("confidence"),
                "backend_id": identification.get("backend_id"),
            },
            data={
                "n_presence": n_presence,
                "n_absence": int(len(frame) - n_presence),
                "n_dropped_nodata": int(extracted["n_dropped_nodata"]),
                "n_occurrences": len(fetched["records"]),
                "columns": list(frame.columns),
                "bbox": sampled["bbox"],
            },
            dag=dag.to_json(),
            effects=self.get_result("infer"),
            explanations=explained["explanations"],
            summary=explained["summary"],
            provenance={
                "seed": self.config.seed,
                "config_hash": self.config.config_hash,
                "run_id": self.config.run_id,
                "version": __version__,
                "query_urls": list(fetched["query_urls"]),
                "llm_model": llm_config.model if llm_config and llm_config.enabled else None,
                "timestamps": timestamps,
            },
        )


def run(config, **kwargs):
    """Run the whole pipeline for ``config``; see :class:`PipelineRunner`."""
    return PipelineRunner(config, **kwargs).run()
