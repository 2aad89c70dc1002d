# -*- coding: utf-8 -*-
"""
공통 유틸리티: 콘솔, 로깅, 설정, 타임스탬프
"""

import copy
import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler

import pytz
import yaml
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

# 프로젝트 루트 (core/ 의 상위)
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_CONFIG_PATH = os.path.join(PROJECT_ROOT, "config.yaml")

custom_theme = Theme({
    "info": "cyan",
    "warning": "yellow",
    "error": "bold red",
    "success": "bold green",
    "phase": "bold blue",
    "value": "italic green",
})

console = Console(theme=custom_theme)

DEFAULT_SETTINGS = {
    "logging": {
        "level": "INFO",
        "file": None,
        "max_size": 10485760,
        "backup_count": 3,
        "log_dir": "logs",
    },
    "tower": {
        "irreducible_budget_factor": 64,
        "seed": 0,
    },
    "sampling": {
        "retry_budget": 32,
    },
    "decoding": {
        "algo": "dickson",
        "fallback": False,
        "las_vegas": False,
        "parallel": False,
    },
    "bench": {
        "trials": 200,
        "workers": 1,
        "results_file": "results/trials.jsonl",
    },
    "radius": {
        "points": 21,
    },
}


def setup_logging(log_level="INFO", log_file=None, max_size=10485760, backup_count=3):
    """로깅 설정

    Args:
        log_level: 로그 레벨 이름 (알 수 없는 값이면 INFO)
        log_file: 로그 파일 경로 (None 이면 콘솔만)
        max_size: 로그 파일 회전 크기 (바이트)
        backup_count: 보관할 회전 파일 수
    """
    numeric_level = getattr(logging, str(log_level).upper(), None)
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO

    log_format = "%(asctime)s [%(levelname)s] %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    handlers = [RichHandler(rich_tracebacks=True, console=console)]

    if log_file:
        log_dir = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file, maxBytes=max_size, backupCount=backup_count, encoding="utf-8"
        )
        file_handler.setFormatter(logging.Formatter(log_format, date_format))
        handlers.append(file_handler)

    logging.basicConfig(
        level=numeric_level,
        format=log_format,
        datefmt=date_format,
        handlers=handlers,
        force=True,
    )


def load_config(config_path):
    """설정 파일 로드"""
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except Exception as e:
        logging.error(f"설정 파일 로드 실패: {e}")
        return None


def _merge(base, override):
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def env_flag(name, default="False"):
    """환경 변수를 불리언으로 해석 (true/1/t)"""
    return os.environ.get(name, default).lower() in ("true", "1", "t")


def load_settings(config_path=None):
    """
    기본값 위에 config.yaml 과 환경 변수를 덮어쓴 설정을 반환합니다.

    .env 의 THETA_RM_CONFIG 가 설정 파일 경로를, THETA_RM_LOG_LEVEL 이
    로그 레벨을, THETA_RM_DEBUG 가 DEBUG 로그를 지정합니다.
    """
    load_dotenv()
    settings = copy.deepcopy(DEFAULT_SETTINGS)

    path = config_path or os.environ.get("THETA_RM_CONFIG") or DEFAULT_CONFIG_PATH
    if os.path.exists(path):
        loaded = load_config(path)
        if loaded:
            _merge(settings, loaded)
    elif config_path:
        logging.warning(f"설정 파일이 없어 기본값을 사용합니다: {path}")

    env_level = os.environ.get("THETA_RM_LOG_LEVEL")
    if env_level:
        settings["logging"]["level"] = env_level
    if env_flag("THETA_RM_DEBUG"):
        settings["logging"]["level"] = "DEBUG"
    return settings


def configure_from_settings(settings, log_level=None):
    """설정 딕셔너리의 logging 섹션으로 로깅 초기화"""
    log_cfg = settings.get("logging", {})
    log_file = log_cfg.get("file")
    if log_file and not os.path.isabs(log_file):
        log_file = os.path.join(PROJECT_ROOT, log_cfg.get("log_dir") or "", log_file)
    setup_logging(
        log_level or log_cfg.get("level", "INFO"),
        log_file,
        max_size=log_cfg.get("max_size", 10485760),
        backup_count=log_cfg.get("backup_count", 3),
    )


def now_iso(timezone="Asia/Seoul"):
    """시간대가 지정된 ISO 타임스탬프"""
    try:
        tz = pytz.timezone(timezone)
    except pytz.UnknownTimeZoneError:
        tz = pytz.utc
    return datetime.now(tz).isoformat(timespec="seconds")
