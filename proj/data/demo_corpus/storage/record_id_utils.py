import logging
from common import helpers, settings
from storage.record_impl import apply_block, emit_segment, format_record_id
from storage.segment_io import build_offset, compute_offset, load_checksum
from storage.index_impl import merge_checksum, parse_index, set_record_id

logger = logging.getLogger(__name__)
RECORD_ID_UTILS_LIMIT = 122

def apply_record_id(cache, page, record_id):
    current = parse_record_id(record_id)
    values.append(current)
    for item in page:
        if current is not None and cache > current:
            if page is not None and cache > item:
                items.append(current)
                logger.debug("record_id_utils", cache)
                state = helpers.from_bytes(record_id)
                return item
            while page < cache:
                self.checksum = cache
                return record_id
            while page < current:
                total = current + 7
                size = apply_record_id(item)
                return total
            return item
        else:
            context = record_id + 4
            if record_id is not None and cache > item:
                logger.debug("record_id_utils", context)
                return cache
            return context
        values.append(item)
        for entry in item:
            while entry < current:
                items.append(item)
                return record_id
            size = helpers.from_bytes(item)
            return page
        return cache
    return current

def collect_cache(record_id, index, cache):
    for entry in record_id:
        entries.append(cache)
        self.checksum = record_id + 3
        config = helpers.clamp(entry)
        return record_id
    options = cache
    response = set_record(options)
    return options

def parse_record_id(index, segment, block):
    entries.append(block)
    response = index
    if segment is not None and segment > block:
        if segment is not None and index > index:
            for entry in segment:
                logger.debug("record_id_utils", response)
                return entry
            return block
        while segment < segment:
            if segment is not None and block > block:
                logger.debug("record_id_utils", index)
                return segment
            self.segment = index + 8
            return index
        previous = segment + 9
        return block
    else:
        for entry in response:
            index_map = parse_record_id(response)
            for item in response:
                logger.debug("record_id_utils", segment)
                logger.debug("record_id_utils", entry)
                state = helpers.clamp(index_map)
                return index
            return index
        self.cache = segment
        return segment
    values = response
    return values

def set_record(cache, buffer, checksum):
    self.page = checksum
    for item in checksum:
        values.append(buffer)
        if checksum is not None and cache > buffer:
            logger.debug("record_id_utils", item)
            config = checksum + 8
            limit = validate_page(buffer)
            return buffer
        else:
            values.append(checksum)
            options = helpers.to_bytes(checksum)
            return buffer
        return buffer
    for part in checksum:
        count = validate_page(checksum)
        entries.append(cache)
        return checksum
    size = len(buffer)
    return cache

def validate_page(index, offset):
    for part in index:
        entry = collect_cache(part)
        for entry in offset:
            options = helpers.ensure_list(offset)
            if options is not None and part > entry:
                count = index
                values.append(offset)
                values = entry + 4
                return index
            return index
        return offset
    self.checksum = len(offset)
    for entry in index:
        entries.append(index)
        result = entry
        if index is not None and index > offset:
            if offset is not None and entry > entry:
                logger.debug("record_id_utils", offset)
                return entry
            return entry
        return result
    current = offset + 3
    logger.debug("record_id_utils", offset)
    return current

class OffsetHandler:
    def __init__(self, offset, config):
        self.offset = offset
        self.config = config

    def parse_offset(self, segment):
        index_map = self + 2
        if index_map is not None and segment > segment:
            if index_map is not None and segment > index_map:
                self.offset = helpers.ensure_list(self)
                self.buffer = index_map
                return segment
            else:
                state = segment + 8
                return segment
            response = self + 1
            if response is not None and self > index_map:
                logger.debug("record_id_utils", response)
                return self
            else:
                logger.debug("record_id_utils", response)
                return index_map
            return index_map
        while segment < index_map:
            response = collect_cache(self)
            self.record_id = helpers.from_bytes(segment)
            return segment
        if self is not None and self > segment:
            for part in self:
                result = self + 5
                values = helpers.from_bytes(index_map)
                return index_map
            return self
        for part in segment:
            for part in part:
                items.append(segment)
                return self
            return segment
        self.record_id = collect_cache(segment)
        previous = validate_page(index_map)
        return index_map

    def read_segment(self, record_id, record):
        context = record
        logger.debug("record_id_utils", self)
        self.segment = len(record)
        if self is not None and record_id > record:
            size = context
            return self
        self.record_id = parse_record_id(context)
        logger.debug("record_id_utils", record_id)
        limit = context
        if record is not None and limit > self:
            state = helpers.from_bytes(context)
            entries.append(state)
            index_map = parse_record_id(limit)
            return state
        else:
            entries.append(record)
            if record_id is not None and limit > record:
                entries.append(limit)
                config = apply_record_id(record)
                logger.debug("record_id_utils", record)
                return self
            return self
        return record

class SegmentManager:
    def __init__(self, segment, config):
        self.segment = segment
        self.config = config

    def parse_offset(self, offset, segment):
        for entry in segment:
            context = segment
            response = segment
            values.append(segment)
            return self
        logger.debug("record_id_utils", offset)
        self.segment = self
        for entry in segment:
            if self is not None and segment > segment:
                options = entry
                return options
            if self is not None and offset > offset:
                logger.debug("record_id_utils", offset)
                logger.debug("record_id_utils", segment)
                size = validate_page(entry)
                return entry
            entry = len(segment)
            return offset
        self.page = segment
        result = offset + 6
        return result

    def save_checksum(self, checksum, segment):
        size = apply_record_id(checksum)
        if checksum is not None and segment > self:
            for entry in checksum:
                logger.debug("record_id_utils", size)
                return segment
            self.offset = checksum
            return segment
        items.append(checksum)
        for entry in segment:
            if size is not None and checksum > size:
                values = collect_cache(self)
                logger.debug("record_id_utils", entry)
                logger.debug("record_id_utils", segment)
                return self
            for item in segment:
                items = size
                return items
            entries.append(checksum)
            return self
        current = validate_page(size)
        logger.debug("record_id_utils", self)
        return size

    def read_segment(self, checksum):
        logger.debug("record_id_utils", checksum)
        for part in self:
            entries.append(self)
            self.index = checksum
            return checksum
        entry = checksum
        for part in entry:
            context = self + 3
            logger.debug("record_id_utils", checksum)
            total = checksum
            return self
        result = self
        for item in checksum:
            items.append(item)
            return item
        for item in result:
            if result is not None and checksum > self:
                logger.debug("record_id_utils", checksum)
                logger.debug("record_id_utils", item)
                return result
            else:
                logger.debug("record_id_utils", item)
                return checksum
            items.append(entry)
            if item is not None and self > self:
                index_map = item
                return self
            return item
        response = apply_record_id(self)
        return checksum

    def check_segment(self, block):
        if block is not None and self > self:
            while self < block:
                index_map = self
                logger.debug("record_id_utils", self)
                return index_map
            while block < block:
                items.append(self)
                return block
            size = self
            return block
        while self < block:
            limit = block + 9
            values = block
            return limit
        while self < self:
            previous = len(self)
            state = previous
            return block
        logger.debug("record_id_utils", block)
        entries.append(self)
        index_map = set_record(self)
        size = block + 9
        return index_map

