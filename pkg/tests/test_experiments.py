"""Tests for the Monte Carlo experiment service"""

import numpy as np
import pytest

from src.engines import ClusterEngine
from src.exceptions import ValidationError
from src.models import EngineName, ExperimentConfig, WeibullInterarrival
from src.services.experiment_service import (
    CLT_SALT,
    ExperimentService,
    ReplicationTask,
    run_replication,
)
from src.services.statsutil import make_stream, regression_through_origin


@pytest.fixture
def service():
    """Create experiment service"""
    return ExperimentService()


def _config(model, kernel, **overrides):
    params = {'horizons': [50.0], 'replications': 20, 'seed': 7}
    params.update(overrides)
    return ExperimentConfig(model=model, kernel=kernel, **params)


def test_run_replication_matches_direct_simulation(weibull_model, exp_kernel):
    """Test a task reduces the path its stream produces"""
    task = ReplicationTask(
        model=weibull_model, kernel=exp_kernel, engine='cluster', horizon=40.0,
        seed=3, salt=(CLT_SALT,), index=5, sample_times=(10.0, 20.0, 40.0),
    )
    summary = run_replication(task)
    path = ClusterEngine(weibull_model, exp_kernel).simulate(40.0, make_stream(3, 5, CLT_SALT))
    assert summary.index == 5
    assert summary.total == len(path)
    assert summary.escaped == path.escaped_count
    assert summary.immigrants == path.immigrant_times.size
    assert list(summary.counts) == [path.count(10.0), path.count(20.0), path.count(40.0)]
    assert summary.hazard_integral > 0


def test_lln_report(service, weibull_model, exp_kernel):
    """Test the LLN table and its summary"""
    config = _config(weibull_model, exp_kernel, horizons=[50.0, 200.0], replications=10)
    report = service.run_lln(config)
    rows = report.tables['lln']
    assert [row['T'] for row in rows] == [50.0, 200.0]
    for row in rows:
        assert set(row) == {'T', 'mean_sup_dev', 'median', 'max', 'se', 'hazard_avg', 'm'}
        assert 0 <= row['median'] <= row['max']
        assert row['mean_sup_dev'] <= row['max']
        assert row['m'] == pytest.approx(report.limits.m)
    assert report.summary['final_mean_sup_dev'] == rows[-1]['mean_sup_dev']
    assert report.summary['final_ratio'] == pytest.approx(rows[-1]['mean_sup_dev'] / report.limits.lln_slope)
    assert report.summary['monotone'] in (0.0, 1.0)


def test_lln_is_deterministic(service, poisson_model, exp_kernel):
    """Test equal configs give equal reports"""
    config = _config(poisson_model, exp_kernel, replications=8)
    assert service.run_lln(config).tables == service.run_lln(config).tables


def test_lln_independent_of_worker_count(service, poisson_model, exp_kernel):
    """Test replications in worker processes match the serial run"""
    serial = service.run_lln(_config(poisson_model, exp_kernel, replications=8))
    parallel = service.run_lln(_config(poisson_model, exp_kernel, replications=8, threads=2))
    assert serial.tables == parallel.tables


def test_invalid_engine_fails_before_workers_start(service, exp_kernel):
    """Test a thinning run on a singular hazard raises in the parent process"""
    model = WeibullInterarrival(scale=1.0, shape=0.5)
    config = _config(model, exp_kernel, engine=EngineName.THINNING, replications=4, threads=2)
    with pytest.raises(ValidationError) as exc_info:
        service.run_lln(config)
    assert exc_info.value.field == 'model'


def test_worker_errors_keep_their_type(service, poisson_model, exp_kernel):
    """Test an error raised inside a worker process reaches the caller unchanged"""
    tasks = [
        ReplicationTask(
            model=poisson_model, kernel=exp_kernel, engine='cluster', horizon=-1.0,
            seed=3, salt=(CLT_SALT,), index=index, sample_times=(),
        )
        for index in range(4)
    ]
    with pytest.raises(ValidationError) as exc_info:
        service._run(tasks, threads=2)
    assert exc_info.value.field == 'horizon'


def test_clt_report(service, weibull_model, exp_kernel):
    """Test CLT tables and the theoretical covariance"""
    config = _config(weibull_model, exp_kernel, horizons=[100.0], replications=30,
                     v_grid=[0.5, 1.0])
    report = service.run_clt(config)
    sigma2 = report.limits.sigma2
    marginals = report.tables['clt_marginals']
    assert [row['v'] for row in marginals] == [0.5, 1.0]
    assert [row['theo_var'] for row in marginals] == pytest.approx([0.5 * sigma2, sigma2])
    assert all(row['var'] > 0 for row in marginals)
    covariances = report.tables['clt_cov']
    assert [(row['u'], row['v']) for row in covariances] == [(0.5, 0.5), (0.5, 1.0), (1.0, 1.0)]
    assert covariances[1]['theo_cov'] == pytest.approx(0.5 * sigma2)
    assert len(report.tables['clt_paths']) == 30 * 2
    assert report.summary['sigma2'] == sigma2
    assert report.summary['var_at_1'] == marginals[-1]['var']
    assert report.summary['ks_pass'] == float(report.summary['ks_final'] < report.summary['ks_crit'])


def test_clt_centering_is_nearly_unbiased(service, poisson_model, exp_kernel):
    """Test the exact mean leaves X(1) centred within 4 standard errors"""
    config = _config(poisson_model, exp_kernel, horizons=[100.0], replications=200,
                     v_grid=[0.5, 1.0])
    report = service.run_clt(config)
    assert report.summary['max_abs_mean_z'] < 4.0


def test_clt_needs_two_grid_points(service, poisson_model, exp_kernel):
    """Test a single v point is rejected"""
    with pytest.raises(ValidationError) as exc_info:
        service.run_clt(_config(poisson_model, exp_kernel, v_grid=[1.0]))
    assert exc_info.value.field == 'v_grid'


def test_variance_fit_report(service, weibull_model, exp_kernel):
    """Test the variance curve and its regression slope"""
    config = _config(weibull_model, exp_kernel, horizons=[20.0], time_step=1.0)
    report = service.run_variance_fit(config)
    rows = report.tables['varfit']
    assert [row['t'] for row in rows] == [float(t) for t in range(1, 21)]
    slope = regression_through_origin([r['t'] for r in rows], [r['sample_var'] for r in rows])
    assert report.summary['slope'] == pytest.approx(slope)
    assert report.documents['varfit_summary'] == report.summary
    assert report.summary['sigma2'] == pytest.approx(report.limits.sigma2)


def test_variance_fit_without_excitation_is_renewal(service, poisson_model, zero_kernel):
    """Test the fitted slope estimates m^3 Var[tau] = 1 for a Poisson process"""
    config = _config(poisson_model, zero_kernel, horizons=[50.0], replications=400, time_step=5.0)
    report = service.run_variance_fit(config)
    assert report.summary['slope'] == pytest.approx(1.0, abs=0.25)


def test_edge_effects_report(service, weibull_model, exp_kernel):
    """Test the escaped-fraction table"""
    config = _config(weibull_model, exp_kernel, horizons=[25.0, 100.0])
    report = service.run_edge_effects(config)
    rows = report.tables['edge']
    assert [row['T'] for row in rows] == [25.0, 100.0]
    assert all(row['escaped_fraction'] >= 0 for row in rows)
    assert report.summary['final_fraction'] == rows[-1]['escaped_fraction']


def test_edge_effects_without_excitation(service, weibull_model, zero_kernel):
    """Test nothing escapes when alpha = 0"""
    report = service.run_edge_effects(_config(weibull_model, zero_kernel, horizons=[10.0, 20.0]))
    assert [row['escaped_fraction'] for row in report.tables['edge']] == [0.0, 0.0]
    assert report.summary['monotone'] == 1.0


def test_edge_effects_rejects_thinning(service, weibull_model, exp_kernel):
    """Test only the cluster engine tracks escaped points"""
    config = _config(weibull_model, exp_kernel, engine=EngineName.THINNING)
    with pytest.raises(ValidationError) as exc_info:
        service.run_edge_effects(config)
    assert exc_info.value.field == 'engine'


def test_engine_agreement_report(service, poisson_model, exp_kernel):
    """Test the agreement document and summary"""
    report = service.run_engine_agreement(_config(poisson_model, exp_kernel, replications=30))
    document = report.documents['agree']
    assert set(document['means']) == {'cluster', 'thinning'}
    assert set(document['ses']) == {'cluster', 'thinning'}
    assert 0.0 <= document['z_pvalue'] <= 1.0
    assert 0.0 <= document['f_pvalue'] <= 1.0
    assert isinstance(document['pass'], bool)
    assert report.summary['abs_z'] == pytest.approx(abs(document['zstat']))
    assert report.summary['pass'] == float(document['pass'])
    assert report.tables == {}


def test_report_to_dict(service, poisson_model, exp_kernel):
    """Test the summary document layout"""
    report = service.run_edge_effects(_config(poisson_model, exp_kernel, replications=5))
    data = report.to_dict()
    assert data['name'] == 'edge'
    assert data['limits']['lln_slope'] == pytest.approx(2.0)
    assert data['summary'] == report.summary
    assert report.metric('final_fraction') == report.summary['final_fraction']
    assert report.metric('missing') is None


def test_config_accepts_engine_name(poisson_model, exp_kernel):
    """Test engine strings are normalized"""
    config = ExperimentConfig(model=poisson_model, kernel=exp_kernel, engine='thinning')
    assert config.engine is EngineName.THINNING
    assert np.isclose(config.v_grid[-1], 1.0)
