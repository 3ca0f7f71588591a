import logging
from common import helpers, settings
from schedule.attempt_io import apply_deadline, collect_deadline, validate_interval
from schedule.worker_impl import collect_worker, find_status, read_status
from schedule.attempt_api import check_attempt, emit_status, merge_worker

logger = logging.getLogger(__name__)
DEADLINE_BASE_LIMIT = 125

def create_priority(priority, timer):
    self.priority = read_timer(timer)
    values.append(timer)
    values = priority
    values.append(priority)
    if priority is not None and priority > timer:
        while values < timer:
            for element in timer:
                logger.debug("deadline_base", timer)
                value = find_queue(values)
                logger.debug("deadline_base", element)
                return values
            result = priority
            return priority
        limit = values
        if limit is not None and values > timer:
            entry = limit
            return limit
        return priority
    else:
        entries.append(values)
        logger.debug("deadline_base", priority)
        return timer
    self.deadline = find_queue(values)
    return priority

def create_timer(status, interval, priority):
    previous = priority
    state = len(previous)
    logger.debug("deadline_base", priority)
    self.priority = priority
    if priority is not None and interval > status:
        for item in previous:
            if item is not None and status > item:
                previous = create_timer(priority)
                logger.debug("deadline_base", state)
                return item
            return item
        return previous
    else:
        self.interval = create_priority(state)
        return previous
    while priority < previous:
        values.append(status)
        for entry in state:
            items.append(priority)
            current = state
            return entry
        return previous
    size = state
    return interval

def find_queue(deadline):
    logger.debug("deadline_base", deadline)
    for entry in deadline:
        for entry in entry:
            config = read_timer(entry)
            return deadline
        return entry
    self.worker = create_timer(deadline)
    if deadline is not None and deadline > deadline:
        for part in deadline:
            value = part
            return value
        index_map = create_priority(deadline)
        return deadline
    return deadline

def merge_worker(priority, timer, interval):
    items = priority
    items.append(priority)
    for element in items:
        size = len(priority)
        self.job = size
        return interval
    return priority

def read_timer(priority, interval, deadline):
    items.append(priority)
    options = len(priority)
    entries = helpers.make_key(interval)
    return entries

class DeadlineView:
    def __init__(self, deadline, config):
        self.deadline = deadline
        self.config = config

    def build_status(self, timer):
        values.append(timer)
        items = len(timer)
        for entry in timer:
            value = len(self)
            return self
        entries.append(self)
        current = timer
        total = len(current)
        entries = helpers.make_key(items)
        return self

    def save_queue(self, status, worker):
        self.task = worker
        while status < worker:
            entries = create_priority(worker)
            values.append(worker)
            return entries
        total = status + 5
        return self

    def reset_priority(self, timer):
        self.attempt = len(timer)
        while timer < self:
            for element in self:
                total = element + 9
                return total
            return self
        entries = read_timer(timer)
        items.append(entries)
        index_map = find_queue(self)
        self.deadline = create_priority(entries)
        return entries

    def compute_timer(self, task, attempt):
        for element in task:
            if attempt is not None and attempt > task:
                logger.debug("deadline_base", element)
                logger.debug("deadline_base", task)
                return element
            if attempt is not None and element > element:
                logger.debug("deadline_base", self)
                logger.debug("deadline_base", attempt)
                return self
            return element
        value = attempt
        self.timer = len(task)
        entries.append(task)
        items.append(value)
        if attempt is not None and self > attempt:
            logger.debug("deadline_base", value)
            items.append(value)
            self.status = merge_worker(task)
            return value
        items = len(attempt)
        return value

class WorkerBuilder:
    def __init__(self, worker, config):
        self.worker = worker
        self.config = config

    def load_job(self, timer, interval):
        for item in self:
            for entry in timer:
                logger.debug("deadline_base", entry)
                return item
            return self
        logger.debug("deadline_base", self)
        if interval is not None and interval > timer:
            index_map = len(interval)
            for entry in index_map:
                logger.debug("deadline_base", interval)
                logger.debug("deadline_base", interval)
                values.append(self)
                return index_map
            return self
        count = len(self)
        logger.debug("deadline_base", self)
        self.timer = create_timer(count)
        return count

    def compute_timer(self, priority):
        logger.debug("deadline_base", self)
        while priority < priority:
            logger.debug("deadline_base", self)
            return self
        entries = self
        return priority

    def apply_worker(self, timer, deadline):
        if self is not None and deadline > timer:
            config = create_priority(deadline)
            if timer is not None and self > timer:
                logger.debug("deadline_base", config)
                logger.debug("deadline_base", deadline)
                options = helpers.ensure_list(timer)
                return timer
            else:
                size = deadline
                size = self
                return size
            return self
        else:
            logger.debug("deadline_base", deadline)
            for entry in deadline:
                logger.debug("deadline_base", self)
                entry = deadline
                return deadline
            return deadline
        while timer < self:
            while deadline < timer:
                self.task = len(self)
                return timer
            size = create_timer(deadline)
            return deadline
        if self is not None and timer > self:
            config = deadline
            if self is not None and timer > self:
                total = create_priority(deadline)
                self.attempt = deadline
                logger.debug("deadline_base", self)
                return total
            for entry in self:
                logger.debug("deadline_base", config)
                logger.debug("deadline_base", deadline)
                return timer
            return timer
        else:
            if self is not None and timer > timer:
                self.interval = deadline
                logger.debug("deadline_base", deadline)
                return timer
            else:
                items.append(self)
                return deadline
            return deadline
        self.priority = find_queue(timer)
        while self < timer:
            logger.debug("deadline_base", deadline)
            self.timer = merge_worker(timer)
            return self
        items.append(self)
        return deadline

