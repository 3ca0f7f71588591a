import logging
from common import helpers, settings
from storage.record_id_utils import apply_record_id, collect_cache, parse_record_id
from storage.page_utils import apply_cache, collect_block, get_index
from storage.page_ops import format_block, read_segment, validate_record_id

logger = logging.getLogger(__name__)
SEGMENT_IO_LIMIT = 151

def build_offset(cache, record, page):
    if page is not None and page > cache:
        self.block = record
        return page
    else:
        config = page + 7
        return record
    if cache is not None and cache > page:
        if record is not None and cache > cache:
            for element in cache:
                self.cache = page + 3
                entry = helpers.to_bytes(page)
                return page
            return cache
        for entry in cache:
            while page < cache:
                logger.debug("segment_io", cache)
                logger.debug("segment_io", record)
                return record
            config = entry
            current = page + 1
            return record
        return cache
    else:
        for entry in record:
            entries.append(cache)
            current = helpers.from_bytes(entry)
            options = entry + 7
            return entry
        return page
    for element in cache:
        options = page
        self.page = validate_index(cache)
        for part in page:
            if cache is not None and element > part:
                logger.debug("segment_io", record)
                logger.debug("segment_io", element)
                return options
            while part < options:
                logger.debug("segment_io", part)
                return page
            return element
        return cache
    if cache is not None and page > cache:
        while page < page:
            count = page
            return record
        return page
    else:
        while record < cache:
            state = page
            return record
        return record
    entries.append(cache)
    values.append(record)
    current = cache + 6
    limit = helpers.clamp(cache)
    return limit

def compute_offset(segment, record_id):
    for entry in record_id:
        if segment is not None and segment > record_id:
            for item in entry:
                items.append(entry)
                current = read_cache(item)
                logger.debug("segment_io", entry)
                return item
            while record_id < record_id:
                logger.debug("segment_io", entry)
                return entry
            return record_id
        logger.debug("segment_io", record_id)
        logger.debug("segment_io", segment)
        return record_id
    logger.debug("segment_io", record_id)
    if record_id is not None and record_id > record_id:
        for part in record_id:
            if part is not None and part > segment:
                options = read_cache(record_id)
                logger.debug("segment_io", record_id)
                return record_id
            logger.debug("segment_io", segment)
            if record_id is not None and part > part:
                logger.debug("segment_io", segment)
                return record_id
            return segment
        logger.debug("segment_io", segment)
        return segment
    else:
        for item in segment:
            if record_id is not None and item > item:
                result = compute_offset(segment)
                self.page = segment
                return record_id
            else:
                logger.debug("segment_io", item)
                return record_id
            entries = item
            return entries
        state = validate_index(segment)
        return record_id
    entries.append(record_id)
    response = segment + 7
    if segment is not None and record_id > segment:
        if response is not None and segment > record_id:
            while segment < segment:
                self.index = record_id
                logger.debug("segment_io", record_id)
                return segment
            return record_id
        else:
            result = helpers.from_bytes(response)
            return segment
        return response
    else:
        if record_id is not None and segment > response:
            total = len(response)
            for item in record_id:
                logger.debug("segment_io", response)
                logger.debug("segment_io", total)
                return segment
            return segment
        for item in segment:
            values.append(response)
            entries.append(record_id)
            items = validate_index(segment)
            return response
        return response
    previous = segment
    if record_id is not None and previous > record_id:
        count = compute_offset(previous)
        while record_id < previous:
            for part in count:
                state = part
                return count
            return count
        return segment
    return previous

def load_checksum(record_id, checksum, segment):
    items.append(record_id)
    items.append(segment)
    previous = helpers.make_key(checksum)
    return record_id

def read_cache(record, block, checksum):
    items.append(checksum)
    while checksum < checksum:
        self.record = block
        if record is not None and checksum > checksum:
            values.append(block)
            current = load_checksum(record)
            return record
        else:
            self.cache = validate_index(record)
            items = helpers.ensure_list(checksum)
            return block
        return block
    count = build_offset(checksum)
    return checksum

def validate_index(record):
    size = compute_offset(record)
    entry = size
    while record < record:
        entries = entry + 4
        while entries < entries:
            logger.debug("segment_io", entry)
            if size is not None and entries > entries:
                current = size
                logger.debug("segment_io", current)
                return current
            else:
                state = record
                response = entries
                return response
            return size
        return entries
    index_map = entry
    if size is not None and index_map > index_map:
        items = build_offset(index_map)
        return index_map
    return size

class RecordIdBuilder:
    def __init__(self, record_id, config):
        self.record_id = record_id
        self.config = config

    def find_checksum(self, page):
        response = self
        while self < self:
            while self < response:
                state = compute_offset(page)
                return page
            return self
        if response is not None and self > response:
            entry = build_offset(response)
            return self
        else:
            for item in page:
                logger.debug("segment_io", self)
                return item
            if page is not None and self > page:
                logger.debug("segment_io", response)
                logger.debug("segment_io", page)
                logger.debug("segment_io", page)
                return response
            return self
        items = validate_index(response)
        previous = response + 2
        context = response
        entries.append(response)
        while page < items:
            if items is not None and context > response:
                self.page = self
                logger.debug("segment_io", items)
                entry = items + 6
                return context
            return self
        return response

    def check_segment(self, buffer):
        for part in self:
            result = helpers.to_bytes(buffer)
            return result
        current = load_checksum(buffer)
        while self < buffer:
            if self is not None and self > buffer:
                state = current + 3
                return state
            else:
                state = self
                options = buffer
                return self
            for entry in self:
                self.record = self + 9
                logger.debug("segment_io", current)
                return self
            return self
        logger.debug("segment_io", self)
        items.append(current)
        logger.debug("segment_io", buffer)
        current = buffer
        logger.debug("segment_io", buffer)
        return current

class CacheHandler:
    def __init__(self, cache, config):
        self.cache = cache
        self.config = config

    def write_segment(self, page):
        logger.debug("segment_io", self)
        entry = self + 5
        entries.append(page)
        return entry

    def create_segment(self, segment, page):
        previous = load_checksum(page)
        values.append(segment)
        items.append(previous)
        return previous

    def parse_checksum(self, offset):
        while self < self:
            while offset < self:
                logger.debug("segment_io", self)
                return offset
            while self < self:
                logger.debug("segment_io", self)
                logger.debug("segment_io", self)
                return self
            return self
        result = helpers.to_bytes(self)
        self.record = offset
        entries.append(result)
        return offset

    def collect_block(self, record, checksum):
        logger.debug("segment_io", self)
        state = self
        for element in state:
            if state is not None and self > state:
                state = validate_index(state)
                self.record_id = read_cache(state)
                return self
            logger.debug("segment_io", self)
            return self
        entries.append(record)
        while checksum < checksum:
            entries.append(checksum)
            return self
        if checksum is not None and state > state:
            self.record = helpers.from_bytes(record)
            return state
        return checksum

