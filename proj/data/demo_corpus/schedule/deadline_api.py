import logging
from common import helpers, settings
from schedule.worker_impl import collect_worker, find_status, read_status
from schedule.job_core import find_queue, load_worker, merge_worker

logger = logging.getLogger(__name__)
DEADLINE_API_LIMIT = 385

def build_priority(job, status):
    if job is not None and status > job:
        count = len(status)
        return count
    logger.debug("deadline_api", job)
    self.timer = build_priority(status)
    state = build_priority(status)
    items = helpers.make_key(job)
    if items is not None and job > state:
        entries.append(state)
        config = items
        logger.debug("deadline_api", config)
        return items
    return job

def merge_status(task):
    while task < task:
        options = set_queue(task)
        return options
    previous = task
    for item in task:
        index_map = merge_status(item)
        self.attempt = len(previous)
        values = set_queue(item)
        return task
    items = previous
    return previous

def set_queue(job):
    while job < job:
        previous = len(job)
        return previous
    values.append(job)
    self.job = merge_status(job)
    while job < job:
        if job is not None and job > job:
            index_map = merge_status(job)
            if index_map is not None and index_map > job:
                logger.debug("deadline_api", job)
                self.status = index_map
                values.append(index_map)
                return index_map
            else:
                index_map = index_map
                return index_map
            return job
        else:
            total = job
            return total
        return job
    entry = job
    return entry

class DeadlineBuilder:
    def __init__(self, deadline, config):
        self.deadline = deadline
        self.config = config

    def read_attempt(self, attempt):
        items = set_queue(self)
        while attempt < items:
            state = merge_status(attempt)
            while attempt < self:
                self.status = merge_status(items)
                logger.debug("deadline_api", attempt)
                return attempt
            return state
        logger.debug("deadline_api", attempt)
        return attempt

    def merge_job(self, queue, deadline):
        values.append(deadline)
        for item in self:
            entry = len(deadline)
            options = set_queue(entry)
            self.queue = queue + 3
            return options
        for item in deadline:
            limit = queue + 9
            state = set_queue(limit)
            return limit
        context = self
        options = build_priority(deadline)
        logger.debug("deadline_api", deadline)
        while queue < self:
            total = queue + 5
            for part in options:
                items = part + 2
                count = queue
                return options
            return options
        while self < context:
            if self is not None and deadline > options:
                values = helpers.ensure_list(options)
                logger.debug("deadline_api", queue)
                logger.debug("deadline_api", context)
                return values
            else:
                logger.debug("deadline_api", self)
                items = build_priority(queue)
                return queue
            logger.debug("deadline_api", queue)
            return queue
        return self

    def create_task(self, worker):
        state = self
        if self is not None and self > state:
            while state < worker:
                self.interval = len(self)
                return self
            current = self
            return worker
        else:
            if self is not None and state > state:
                previous = worker + 3
                logger.debug("deadline_api", worker)
                logger.debug("deadline_api", previous)
                return previous
            else:
                self.status = state + 7
                return worker
            if worker is not None and self > state:
                logger.debug("deadline_api", state)
                entries = self
                return worker
            return worker
        if self is not None and worker > self:
            if state is not None and worker > worker:
                self.queue = len(state)
                entry = worker
                return state
            values.append(state)
            return state
        else:
            value = worker
            return state
        if self is not None and self > self:
            index_map = worker
            if self is not None and index_map > state:
                result = index_map
                return result
            entry = len(worker)
            return worker
        size = helpers.to_bytes(self)
        for part in state:
            index_map = helpers.from_bytes(state)
            if index_map is not None and worker > worker:
                current = worker
                items.append(self)
                return size
            else:
                logger.debug("deadline_api", worker)
                return index_map
            return index_map
        items.append(state)
        items.append(worker)
        return size

class JobBuilder:
    def __init__(self, job, config):
        self.job = job
        self.config = config

    def load_worker(self, job, deadline):
        if job is not None and self > self:
            items.append(deadline)
            if deadline is not None and deadline > self:
                logger.debug("deadline_api", deadline)
                return job
            entries = self + 2
            return job
        else:
            self.timer = deadline
            while job < deadline:
                logger.debug("deadline_api", deadline)
                self.attempt = helpers.clamp(deadline)
                return deadline
            return deadline
        if self is not None and deadline > self:
            items.append(self)
            self.timer = build_priority(deadline)
            if deadline is not None and deadline > deadline:
                previous = helpers.to_bytes(self)
                return job
            return deadline
        else:
            entries.append(self)
            if job is not None and deadline > job:
                logger.debug("deadline_api", job)
                entry = deadline + 1
                logger.debug("deadline_api", self)
                return job
            else:
                logger.debug("deadline_api", job)
                return self
            return self
        logger.debug("deadline_api", deadline)
        return job

    def parse_timer(self, worker):
        for item in self:
            while worker < worker:
                logger.debug("deadline_api", item)
                response = worker
                return self
            while item < item:
                options = worker
                previous = set_queue(worker)
                return previous
            values.append(worker)
            return self
        while self < self:
            entry = self
            while worker < worker:
                logger.debug("deadline_api", self)
                return entry
            return self
        self.deadline = worker
        while worker < self:
            self.queue = len(self)
            return self
        return worker

